//! Duplicate-method detection over normalized body token sequences.
//!
//! - Type 1: comments and whitespace dropped, lexemes kept verbatim.
//! - Type 2: additionally, identifiers become positional placeholders
//!   (`ID1`, `ID2`, ... in first-occurrence order) and literals become `LIT`.
//!
//! Methods are grouped project-wide on exact equality of the normalized
//! sequence. Name and signature play no part.

use std::collections::HashMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::frontend::{Token, TokenKind};
use crate::model::MethodRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NormalizationLevel {
    #[default]
    Type1,
    Type2,
}

impl NormalizationLevel {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(NormalizationLevel::Type1),
            2 => Some(NormalizationLevel::Type2),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            NormalizationLevel::Type1 => 1,
            NormalizationLevel::Type2 => 2,
        }
    }
}

impl fmt::Display for NormalizationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type{}", self.number())
    }
}

pub fn normalize_body(body: &[Token], level: NormalizationLevel) -> Vec<String> {
    let mut placeholders: HashMap<&str, usize> = HashMap::new();
    body.iter()
        .filter(|t| !t.kind.is_trivia() && t.kind != TokenKind::EndOfInput)
        .map(|t| match level {
            NormalizationLevel::Type1 => t.lexeme.clone(),
            NormalizationLevel::Type2 => match t.kind {
                TokenKind::Identifier => {
                    let next = placeholders.len() + 1;
                    let n = *placeholders.entry(t.lexeme.as_str()).or_insert(next);
                    format!("ID{n}")
                }
                k if k.is_literal() => "LIT".to_owned(),
                _ => t.lexeme.clone(),
            },
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub level: NormalizationLevel,
    /// Hex SHA-256 prefix of the normalized sequence.
    pub digest: String,
    pub normalized: Vec<String>,
}

impl Fingerprint {
    pub fn of(body: &[Token], level: NormalizationLevel) -> Self {
        let normalized = normalize_body(body, level);
        let mut hasher = Sha256::new();
        for lexeme in &normalized {
            hasher.update(lexeme.as_bytes());
            hasher.update([0u8]);
        }
        let digest = hasher.finalize();
        let digest = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
        Fingerprint {
            level,
            digest,
            normalized,
        }
    }

    pub fn normalized_length(&self) -> usize {
        self.normalized.len()
    }
}

/// An equivalence class of methods with identical normalized bodies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloneGroup<'m> {
    /// Sorted by (file path, start line).
    pub members: Vec<&'m MethodRecord>,
}

impl<'m> CloneGroup<'m> {
    /// Member with the smallest (file path, start line).
    pub fn representative(&self) -> &'m MethodRecord {
        self.members[0]
    }

    pub fn is_clone(&self) -> bool {
        self.members.len() > 1
    }
}

fn position(m: &MethodRecord) -> (&str, u32) {
    (m.file_path.as_str(), m.start_line)
}

/// Partitions `records` into clone groups. Bodiless methods are
/// singletons. Groups come back ordered by representative.
pub fn detect_clone_groups<'m>(
    records: &[&'m MethodRecord],
    level: NormalizationLevel,
) -> Vec<CloneGroup<'m>> {
    // digest -> buckets of exactly-equal sequences (guards against collisions)
    let mut by_digest: HashMap<&str, Vec<Vec<usize>>> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, record) in records.iter().enumerate() {
        let Some(fp) = record.fingerprint(level) else {
            groups.push(vec![i]);
            continue;
        };
        let buckets = by_digest.entry(fp.digest.as_str()).or_default();
        let existing = buckets.iter_mut().find(|bucket| {
            records[bucket[0]]
                .fingerprint(level)
                .is_some_and(|other| other.normalized == fp.normalized)
        });
        match existing {
            Some(bucket) => bucket.push(i),
            None => buckets.push(vec![i]),
        }
    }
    groups.extend(by_digest.into_values().flatten());

    let mut groups: Vec<CloneGroup<'m>> = groups
        .into_iter()
        .map(|indices| {
            let mut members: Vec<(usize, &'m MethodRecord)> =
                indices.into_iter().map(|i| (i, records[i])).collect();
            members.sort_by(|a, b| position(a.1).cmp(&position(b.1)).then(a.0.cmp(&b.0)));
            CloneGroup {
                members: members.into_iter().map(|(_, m)| m).collect(),
            }
        })
        .collect();
    groups.sort_by(|a, b| position(a.representative()).cmp(&position(b.representative())));
    groups
}

pub fn select_representatives<'m>(groups: &[CloneGroup<'m>]) -> Vec<&'m MethodRecord> {
    groups.iter().map(CloneGroup::representative).collect()
}
