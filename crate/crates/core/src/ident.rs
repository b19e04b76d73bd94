use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

use crate::error::{malformed, Error, Result};

/// A token naming a cell of some sort inside one presentation.
///
/// Tokens are non-empty and contain neither whitespace nor the characters
/// `:` and `,`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Id(String);

impl Id {
    pub fn new(token: impl Into<String>) -> Result<Id> {
        let token = token.into();
        let bad = token.is_empty()
            || token
                .chars()
                .any(|c| c.is_whitespace() || c == ':' || c == ',');
        if bad {
            return Err(Error::InvalidIdentifier(token));
        }
        Ok(Id(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for Id {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Id {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl PartialEq<str> for Id {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for Id {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// The declared tokens of one sort, sorted and free of duplicates. A token's
/// position in this list is its dense index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Tokens(Vec<Id>);

impl Tokens {
    pub(crate) fn from_strings<I, S>(sort: &str, tokens: I) -> Result<Tokens>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ids = tokens
            .into_iter()
            .map(|t| Id::new(t.as_ref().to_string()))
            .collect::<Result<Vec<_>>>()?;
        ids.sort();
        for pair in ids.windows(2) {
            if pair[0] == pair[1] {
                return Err(malformed(alloc::format!(
                    "duplicate {sort} identifier {}",
                    pair[0]
                )));
            }
        }
        Ok(Tokens(ids))
    }

    pub(crate) fn index(&self, token: &str) -> Option<usize> {
        self.0.binary_search_by(|id| id.as_str().cmp(token)).ok()
    }

    pub(crate) fn lookup(&self, sort: &str, token: &str) -> Result<usize> {
        self.index(token)
            .ok_or_else(|| malformed(alloc::format!("undeclared {sort} {token:?}")))
    }

    pub(crate) fn get(&self, index: usize) -> &Id {
        &self.0[index]
    }

    pub(crate) fn len(&self) -> usize {
        self.0.len()
    }

    pub(crate) fn as_slice(&self) -> &[Id] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_forbidden_characters() {
        assert!(Id::new("a|b<c").is_ok());
        for bad in ["", "a b", "a:b", "a,b", "x\ty"] {
            assert!(matches!(Id::new(bad), Err(Error::InvalidIdentifier(_))), "{bad:?}");
        }
    }

    #[test]
    fn tokens_sorted_and_unique() {
        let t = Tokens::from_strings("object", ["y", "x", "z"]).unwrap();
        assert_eq!(t.index("x"), Some(0));
        assert_eq!(t.index("z"), Some(2));
        assert!(Tokens::from_strings("object", ["x", "x"]).is_err());
    }
}
