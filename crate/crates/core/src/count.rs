//! Exact unbounded counts, optionally carried together with their
//! factorization as a product of Mersenne numbers 2^a - 1.
//!
//! Every solution count of the subset equation is a product of factors
//! 2^a - 1 where `a` ranges over fiber sizes. We keep both the exact value
//! (the source of truth for all divisibility checks) and, when known, the
//! multiset of exponents `a` for reporting.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// An exact non-negative integer count.
///
/// `mersenne_exponents`, when present, is a sorted multiset `[a_1, ..., a_r]`
/// with the invariant `value == prod_i (2^{a_i} - 1)`. A zero count never
/// carries exponents (an empty product is 1, not 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigCount {
    value: BigUint,
    mersenne_exponents: Option<Vec<u64>>,
}

fn mersenne_product(exponents: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    for &a in exponents {
        acc *= (BigUint::one() << a) - 1u32;
    }
    acc
}

impl BigCount {
    pub fn zero() -> Self {
        BigCount {
            value: BigUint::zero(),
            mersenne_exponents: None,
        }
    }

    /// Plain value with no factored form attached.
    pub fn from_u64(v: u64) -> Self {
        BigCount {
            value: BigUint::from(v),
            mersenne_exponents: None,
        }
    }

    pub fn from_biguint(v: BigUint) -> Self {
        BigCount {
            value: v,
            mersenne_exponents: None,
        }
    }

    /// 2^a - 1 for a single exponent `a >= 1`.
    pub fn mersenne(a: u64) -> Self {
        Self::from_mersenne_multiset(std::iter::once(a))
    }

    /// (2^a - 1)^e, the divisor shape used by the gcd-based bounds.
    pub fn mersenne_power(a: u64, e: usize) -> Self {
        Self::from_mersenne_multiset(std::iter::repeat(a).take(e))
    }

    /// Exact product over a multiset of exponents; each must be >= 1.
    pub fn from_mersenne_multiset(exponents: impl IntoIterator<Item = u64>) -> Self {
        let mut exps: Vec<u64> = exponents.into_iter().collect();
        assert!(exps.iter().all(|&a| a >= 1), "mersenne exponents must be >= 1");
        exps.sort_unstable();
        BigCount {
            value: mersenne_product(&exps),
            mersenne_exponents: Some(exps),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn mersenne_exponents(&self) -> Option<&[u64]> {
        self.mersenne_exponents.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.value.bit(0)
    }

    /// Exact divisibility test: is `self` a multiple of `divisor`?
    ///
    /// A zero dividend counts as a multiple of everything. Divisibility is
    /// always decided on the exact values, never on the exponent multisets.
    pub fn is_multiple_of(&self, divisor: &BigCount) -> bool {
        if self.value.is_zero() {
            return true;
        }
        if divisor.value.is_zero() {
            return false;
        }
        (&self.value % &divisor.value).is_zero()
    }

    /// Product that merges factored forms when both sides carry one.
    pub fn mul(&self, other: &BigCount) -> BigCount {
        let exps = match (&self.mersenne_exponents, &other.mersenne_exponents) {
            (Some(a), Some(b)) => {
                let mut m: Vec<u64> = a.iter().chain(b.iter()).copied().collect();
                m.sort_unstable();
                Some(m)
            }
            _ => None,
        };
        BigCount {
            value: &self.value * &other.value,
            mersenne_exponents: if self.value.is_zero() || other.value.is_zero() {
                None
            } else {
                exps
            },
        }
    }

    pub fn to_decimal(&self) -> String {
        self.value.to_str_radix(10)
    }

    /// Compact human-readable form: the factored shape `(2^4-1)(2^9-1)^2`
    /// when an exponent multiset is tracked, otherwise the decimal value.
    pub fn factored_desc(&self) -> String {
        let Some(exps) = &self.mersenne_exponents else {
            return self.to_decimal();
        };
        if exps.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < exps.len() {
            let a = exps[i];
            let run = exps[i..].iter().take_while(|&&b| b == a).count();
            out.push_str(&format!("(2^{a}-1)"));
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal())
    }
}

#[derive(Serialize, Deserialize)]
struct BigCountRepr {
    value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mersenne_exponents: Option<Vec<u64>>,
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BigCountRepr {
            value: self.to_decimal(),
            mersenne_exponents: self.mersenne_exponents.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BigCountRepr::deserialize(deserializer)?;
        let value = BigUint::parse_bytes(repr.value.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom(format!("invalid decimal count {:?}", repr.value)))?;
        if let Some(exps) = &repr.mersenne_exponents {
            if exps.iter().any(|&a| a == 0) || mersenne_product(exps) != value {
                return Err(D::Error::custom(
                    "mersenne_exponents do not multiply to value",
                ));
            }
        }
        let mut exps = repr.mersenne_exponents;
        if let Some(e) = &mut exps {
            e.sort_unstable();
        }
        Ok(BigCount {
            value,
            mersenne_exponents: exps,
        })
    }
}
