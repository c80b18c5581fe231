use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::Error;

/// Monomial orders with variable priority `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermOrder {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp_lex(b),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| a.cmp_lex(b)),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // the last differing exponent decides: smaller exponent wins
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::DegRevLex => "degrevlex",
            TermOrder::DegLex => "deglex",
            TermOrder::Lex => "lex",
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "degrevlex" | "grevlex" | "revlex" => Ok(TermOrder::DegRevLex),
            "deglex" | "glex" => Ok(TermOrder::DegLex),
            "lex" | "plex" | "pure_lex" => Ok(TermOrder::Lex),
            other => Err(Error::Precondition(format!(
                "unknown term order {other:?}; expected degrevlex, deglex or lex"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_prefers_smaller_last_exponent() {
        // x1*x3 vs x2^2
        assert_eq!(
            TermOrder::DegRevLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        // deglex disagrees on the same pair
        assert_eq!(
            TermOrder::DegLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(
            TermOrder::Lex.compare(&m(&[1, 0, 0, 2]), &m(&[0, 3, 0, 0])),
            Ordering::Greater
        );
        for o in [TermOrder::Lex, TermOrder::DegLex, TermOrder::DegRevLex] {
            assert_eq!(o.compare(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
        }
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, n).prop_map(|e| Monomial::from_exponents(&e))
    }

    proptest! {
        #[test]
        fn multiplicative_total_order(a in mono(4), b in mono(4), c in mono(4)) {
            for o in [TermOrder::Lex, TermOrder::DegLex, TermOrder::DegRevLex] {
                let ab = o.compare(&a, &b);
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_eq!(o.compare(&b, &a), ab.reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                // 1 is the smallest monomial
                prop_assert_ne!(o.compare(&Monomial::one(4), &a), Ordering::Greater);
            }
        }
    }
}
