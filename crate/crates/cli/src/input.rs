use std::fs;
use std::io::{self, Read};
use std::path::Path;

use lynsub::{Error, SymbolKind, Text};
use sha2::{Digest, Sha256};

/// One named input as read from disk or stdin.
pub struct RawInput {
    pub name: String,
    pub bytes: Vec<u8>,
}

pub fn read_inputs(files: &[String]) -> io::Result<Vec<RawInput>> {
    if files.is_empty() {
        return Ok(vec![read_one("-")?]);
    }
    files.iter().map(|f| read_one(f)).collect()
}

pub fn read_one(name: &str) -> io::Result<RawInput> {
    let bytes = if name == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(Path::new(name)).map_err(|e| io::Error::new(e.kind(), format!("{name}: {e}")))?
    };
    Ok(RawInput {
        name: name.to_owned(),
        bytes,
    })
}

/// Byte mode drops one trailing line ending; token mode parses integers.
pub fn symbols(input: &RawInput, tokens: bool) -> Result<Vec<i64>, Error> {
    if tokens {
        let s = std::str::from_utf8(&input.bytes)
            .map_err(|e| Error::Parse(format!("{}: {e}", input.name)))?;
        lynsub::text::parse_tokens(s)
    } else {
        Ok(strip_newline(&input.bytes)
            .iter()
            .map(|&b| i64::from(b))
            .collect())
    }
}

pub fn strip_newline(bytes: &[u8]) -> &[u8] {
    let b = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    b.strip_suffix(b"\r").unwrap_or(b)
}

pub fn kind(tokens: bool) -> SymbolKind {
    if tokens {
        SymbolKind::Tokens
    } else {
        SymbolKind::Bytes
    }
}

pub fn text(input: &RawInput, tokens: bool) -> Result<Text, Error> {
    Ok(Text::normalize(&symbols(input, tokens)?, kind(tokens)))
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}
