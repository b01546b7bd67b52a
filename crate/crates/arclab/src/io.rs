//! The generator file format shared by all fixtures.
//!
//! Line 1 is `degree <n>`; each subsequent non-empty line is one
//! permutation in disjoint-cycle notation with 1-based points, e.g.
//! `(1,2,8)(4,5)`.  The identity is written `()`.  `#` starts a comment.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use std::path::Path;

pub fn parse_generators(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .map(|l| match l.find('#') {
            Some(i) => l[..i].trim(),
            None => l.trim(),
        })
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty generator file".into()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `degree <n>`, got {header:?}")))?;
    if degree == 0 {
        return Err(Error::Parse("degree must be positive".into()));
    }
    let mut gens = Vec::new();
    for line in lines {
        gens.push(Perm::parse_cycles(line, degree)?);
    }
    if gens.is_empty() {
        return Err(Error::Parse("generator file lists no permutations".into()));
    }
    PermGroup::new(degree, gens)
}

pub fn format_generators(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.cycle_string());
        out.push('\n');
    }
    out
}

pub fn load_generators(path: impl AsRef<Path>) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_generators(&text)
}

pub fn save_generators(group: &PermGroup, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_generators(group))?;
    Ok(())
}
