use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        match s {
            "q" | "Q" | "0" | "rational" | "rationals" => Ok(Field::Rational),
            _ => {
                let inner = s
                    .strip_prefix("GF(")
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(s);
                let p: u32 = inner
                    .parse()
                    .map_err(|_| Error::NotPrime(0))?;
                Field::prime(p)
            }
        }
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = Error;

    fn try_from(s: String) -> Result<Field> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_names() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("GF(3)".parse::<Field>().unwrap(), Field::Prime(3));
        assert!("4".parse::<Field>().is_err());
        assert!("x".parse::<Field>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for f in [Field::Rational, Field::Prime(2), Field::Prime(101)] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
    }
}
