//! Machine-checkable verdicts for the published divisibility claims.
//!
//! Every numbered claim is identified by a stable machine token
//! ([`ClaimId`]); a [`Verdict`] records one concrete instance of a claim —
//! which group, which `n`, which target set — together with the exact
//! dividend and divisor (or computed and expected value) and whether the
//! claim held.

pub mod checks;
pub mod suite;

use crate::count::BigCount;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Stable identifiers for the checked claims. The serialized token is part
/// of the report format; the variant names describe what each claim says.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum ClaimId {
    /// `|N_{n,l}|` is a multiple of `gcd(n, |C_G(l)|)`.
    #[serde(rename = "THM_1_1")]
    Frobenius,
    /// For a subgroup `L`, the fiber sum over `L` is a multiple of `|L|`.
    #[serde(rename = "THM_1_2_I")]
    SubgroupFiberSum,
    /// For a normal subset `L`, the fiber sum is a multiple of `gcd(n, |G|)`.
    #[serde(rename = "THM_1_2_II")]
    NormalSubsetFiberSum,
    /// `exp(G) | n` forces the count to `2^{|G|}-1` (for `L = {1}`) or `0`.
    #[serde(rename = "LEM_2_1_I")]
    ExponentAnnihilation,
    /// `gcd(n, exp(G)) = 1` forces exactly one solution.
    #[serde(rename = "LEM_2_1_II")]
    CoprimeUniqueness,
    /// Every fiber over `L` is a multiple of `gcd(n, |C_G(L)|)`.
    #[serde(rename = "LEM_2_1_III")]
    CentralizerGcdFiber,
    /// When the power map is an endomorphism the count is
    /// `[2^{|Ker|}-1]^{|L|}` (or `0` off the image).
    #[serde(rename = "LEM_2_1_IV")]
    EndomorphismKernelForm,
    /// The fiber sum over a subgroup equals `|{x : o_L(x) | n}|`.
    #[serde(rename = "PROP_2_2")]
    RelativeOrderCount,
    /// The count is a multiple of `[2^{gcd(n, |C_G(L)|)}-1]^{|L|}`.
    #[serde(rename = "THM_2_3")]
    ProductFormulaDivisor,
    /// For normal `L`, the per-class product divisor divides the count.
    #[serde(rename = "COR_2_4")]
    ClassPartitionDivisor,
    /// When the power map is an endomorphism, `[2^{gcd(n,|G|)}-1]^{|L|}`
    /// divides the count.
    #[serde(rename = "COR_2_5")]
    EndomorphismDivisor,
    /// Closed form for abelian groups, plus the `2^{|G|}-1` divisibility.
    #[serde(rename = "THM_2_6")]
    AbelianClosedForm,
    /// Closed-form order statistics of the extraspecial families.
    #[serde(rename = "LEM_2_7")]
    ExtraspecialOrderStatistics,
    /// Value sets of extraspecial counts, including attainment.
    #[serde(rename = "THM_2_8")]
    ExtraspecialValueSet,
    /// `|Ω_i(G)|` divides `|G|` for `p`-groups in the divisibility class.
    #[serde(rename = "OMEGA_DIV")]
    OmegaDivisibility,
    /// Open question: the subgroup fiber sum is a multiple of
    /// `gcd(n, |N_G(L)|)` even for non-normal subgroups.
    #[serde(rename = "OP_1")]
    NormalizerGcd,
}

impl ClaimId {
    pub const ALL: [ClaimId; 16] = [
        ClaimId::Frobenius,
        ClaimId::SubgroupFiberSum,
        ClaimId::NormalSubsetFiberSum,
        ClaimId::ExponentAnnihilation,
        ClaimId::CoprimeUniqueness,
        ClaimId::CentralizerGcdFiber,
        ClaimId::EndomorphismKernelForm,
        ClaimId::RelativeOrderCount,
        ClaimId::ProductFormulaDivisor,
        ClaimId::ClassPartitionDivisor,
        ClaimId::EndomorphismDivisor,
        ClaimId::AbelianClosedForm,
        ClaimId::ExtraspecialOrderStatistics,
        ClaimId::ExtraspecialValueSet,
        ClaimId::OmegaDivisibility,
        ClaimId::NormalizerGcd,
    ];

    /// The serialized machine token, e.g. `THM_2_3`.
    pub fn token(self) -> &'static str {
        match self {
            ClaimId::Frobenius => "THM_1_1",
            ClaimId::SubgroupFiberSum => "THM_1_2_I",
            ClaimId::NormalSubsetFiberSum => "THM_1_2_II",
            ClaimId::ExponentAnnihilation => "LEM_2_1_I",
            ClaimId::CoprimeUniqueness => "LEM_2_1_II",
            ClaimId::CentralizerGcdFiber => "LEM_2_1_III",
            ClaimId::EndomorphismKernelForm => "LEM_2_1_IV",
            ClaimId::RelativeOrderCount => "PROP_2_2",
            ClaimId::ProductFormulaDivisor => "THM_2_3",
            ClaimId::ClassPartitionDivisor => "COR_2_4",
            ClaimId::EndomorphismDivisor => "COR_2_5",
            ClaimId::AbelianClosedForm => "THM_2_6",
            ClaimId::ExtraspecialOrderStatistics => "LEM_2_7",
            ClaimId::ExtraspecialValueSet => "THM_2_8",
            ClaimId::OmegaDivisibility => "OMEGA_DIV",
            ClaimId::NormalizerGcd => "OP_1",
        }
    }

    pub fn from_token(token: &str) -> Option<ClaimId> {
        ClaimId::ALL.iter().copied().find(|c| c.token() == token)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One checked instance of a claim.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    #[serde(rename = "claim_id")]
    pub claim: ClaimId,
    pub group: String,
    pub n: u64,
    /// Human-readable descriptor of the instance: the target set as a
    /// sorted id list, subgroup generators, or the checked statistic.
    pub instance: String,
    pub dividend: BigCount,
    pub divisor: BigCount,
    pub holds: bool,
    pub note: String,
}

impl Verdict {
    /// Divisibility-style verdict: `holds` iff `divisor` divides `dividend`
    /// exactly (a zero dividend counts as divisible).
    pub fn divisibility(
        claim: ClaimId,
        group: &str,
        n: u64,
        instance: impl Into<String>,
        dividend: BigCount,
        divisor: BigCount,
        note: impl Into<String>,
    ) -> Verdict {
        let holds = dividend.is_multiple_of(&divisor);
        Verdict {
            claim,
            group: group.to_string(),
            n,
            instance: instance.into(),
            dividend,
            divisor,
            holds,
            note: note.into(),
        }
    }

    /// Value-style verdict: `holds` iff computed (`dividend`) equals
    /// expected (`divisor`).
    pub fn equality(
        claim: ClaimId,
        group: &str,
        n: u64,
        instance: impl Into<String>,
        computed: BigCount,
        expected: BigCount,
        note: impl Into<String>,
    ) -> Verdict {
        let holds = computed.value() == expected.value();
        Verdict {
            claim,
            group: group.to_string(),
            n,
            instance: instance.into(),
            dividend: computed,
            divisor: expected,
            holds,
            note: note.into(),
        }
    }

    /// Membership-style verdict for value-set claims; `expected` is the
    /// closest claimed description, carried for reporting.
    pub fn membership(
        claim: ClaimId,
        group: &str,
        n: u64,
        instance: impl Into<String>,
        computed: BigCount,
        expected: BigCount,
        holds: bool,
        note: impl Into<String>,
    ) -> Verdict {
        Verdict {
            claim,
            group: group.to_string(),
            n,
            instance: instance.into(),
            dividend: computed,
            divisor: expected,
            holds,
            note: note.into(),
        }
    }

    /// Deterministic ordering key used when merging parallel results.
    pub fn sort_key(&self) -> (ClaimId, String, u64, String) {
        (self.claim, self.group.clone(), self.n, self.instance.clone())
    }
}

/// The four classified extraspecial families of order `p^{2k+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ExtraspecialKind {
    /// `D8^{∘k}` (p = 2).
    Dihedral,
    /// `Q8 ∘ D8^{∘(k-1)}` (p = 2).
    Quaternion,
    /// `M_{p^3}^{∘k}` (odd p, exponent `p^2`).
    Modular,
    /// `He_p^{∘k}` (odd p, exponent `p`).
    Heisenberg,
}

/// Which extraspecial family a catalog group was constructed as.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExtraspecialFamily {
    pub kind: ExtraspecialKind,
    pub p: u64,
    pub k: u32,
}

impl ExtraspecialFamily {
    pub fn order(&self) -> u64 {
        self.p.pow(2 * self.k + 1)
    }

    /// Closed-form order statistics `(d, n_d)` for `d > 1`.
    pub fn expected_order_statistics(&self) -> Vec<(u64, u64)> {
        let (p, k) = (self.p, self.k);
        match self.kind {
            ExtraspecialKind::Modular => vec![
                (p, p.pow(2 * k) - 1),
                (p * p, (p - 1) * p.pow(2 * k)),
            ],
            ExtraspecialKind::Heisenberg => vec![(p, p.pow(2 * k + 1) - 1)],
            ExtraspecialKind::Dihedral => {
                let (four_k, two_k) = (4u64.pow(k), 2u64.pow(k));
                vec![(2, four_k + two_k - 1), (4, four_k - two_k)]
            }
            ExtraspecialKind::Quaternion => {
                let (four_k, two_k) = (4u64.pow(k), 2u64.pow(k));
                vec![(2, four_k - two_k - 1), (4, four_k + two_k)]
            }
        }
    }

    /// The claimed non-zero values of `|N_{n,L}|` for this family (the full
    /// claimed set also contains `0`).
    pub fn claimed_nonzero_values(&self) -> Vec<BigCount> {
        let (p, k) = (self.p, self.k);
        let full = BigCount::mersenne(self.order());
        let mut values = vec![BigCount::from_u64(1)];
        match self.kind {
            ExtraspecialKind::Modular => {
                for j in 1..=p {
                    values.push(BigCount::mersenne_power(p.pow(2 * k), j as usize));
                }
            }
            ExtraspecialKind::Heisenberg => {}
            ExtraspecialKind::Dihedral | ExtraspecialKind::Quaternion => {
                let (four_k, two_k) = (4u64.pow(k), 2u64.pow(k));
                let small = BigCount::mersenne(four_k - two_k);
                let large = BigCount::mersenne(four_k + two_k);
                values.push(small.mul(&large));
                values.push(small);
                values.push(large);
            }
        }
        values.push(full);
        values
    }

    /// Human-readable family name, e.g. `D8^o2` or `Q8oD8^o1`.
    pub fn describe(&self) -> String {
        match self.kind {
            ExtraspecialKind::Dihedral => format!("D8^o{}", self.k),
            ExtraspecialKind::Quaternion => format!("Q8oD8^o{}", self.k - 1),
            ExtraspecialKind::Modular => format!("M{}^o{}", self.p.pow(3), self.k),
            ExtraspecialKind::Heisenberg => format!("He{}^o{}", self.p, self.k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip_and_are_ordered() {
        for claim in ClaimId::ALL {
            assert_eq!(ClaimId::from_token(claim.token()), Some(claim));
            let json = serde_json::to_string(&claim).unwrap();
            assert_eq!(json, format!("\"{}\"", claim.token()));
        }
        // Declaration order is the deterministic report order.
        let mut sorted = ClaimId::ALL.to_vec();
        sorted.sort();
        assert_eq!(sorted, ClaimId::ALL.to_vec());
    }

    #[test]
    fn divisibility_verdict_semantics() {
        let v = Verdict::divisibility(
            ClaimId::ProductFormulaDivisor,
            "S3",
            2,
            "L={0,4}",
            BigCount::from_u64(15),
            BigCount::from_u64(1),
            "",
        );
        assert!(v.holds);
        let v = Verdict::divisibility(
            ClaimId::EndomorphismDivisor,
            "S3",
            2,
            "L={0,4}",
            BigCount::from_u64(15),
            BigCount::from_u64(9),
            "",
        );
        assert!(!v.holds);
        // Zero dividend is a multiple of everything.
        let v = Verdict::divisibility(
            ClaimId::ProductFormulaDivisor,
            "S3",
            2,
            "L={1}",
            BigCount::zero(),
            BigCount::from_u64(3),
            "",
        );
        assert!(v.holds);
    }

    #[test]
    fn family_order_statistics() {
        let d8 = ExtraspecialFamily {
            kind: ExtraspecialKind::Dihedral,
            p: 2,
            k: 1,
        };
        assert_eq!(d8.expected_order_statistics(), vec![(2, 5), (4, 2)]);
        let q8d8 = ExtraspecialFamily {
            kind: ExtraspecialKind::Quaternion,
            p: 2,
            k: 2,
        };
        assert_eq!(q8d8.expected_order_statistics(), vec![(2, 11), (4, 20)]);
        let he3 = ExtraspecialFamily {
            kind: ExtraspecialKind::Heisenberg,
            p: 3,
            k: 1,
        };
        assert_eq!(he3.expected_order_statistics(), vec![(3, 26)]);
        let m27 = ExtraspecialFamily {
            kind: ExtraspecialKind::Modular,
            p: 3,
            k: 1,
        };
        assert_eq!(m27.expected_order_statistics(), vec![(3, 8), (9, 18)]);
    }

    #[test]
    fn claimed_value_sets() {
        let m27 = ExtraspecialFamily {
            kind: ExtraspecialKind::Modular,
            p: 3,
            k: 1,
        };
        let values: Vec<String> = m27
            .claimed_nonzero_values()
            .iter()
            .map(|v| v.factored_desc())
            .collect();
        assert_eq!(
            values,
            vec!["1", "(2^9-1)", "(2^9-1)^2", "(2^9-1)^3", "(2^27-1)"]
        );
        let d8 = ExtraspecialFamily {
            kind: ExtraspecialKind::Dihedral,
            p: 2,
            k: 1,
        };
        let values: Vec<String> = d8
            .claimed_nonzero_values()
            .iter()
            .map(|v| v.factored_desc())
            .collect();
        assert_eq!(
            values,
            vec!["1", "(2^2-1)(2^6-1)", "(2^2-1)", "(2^6-1)", "(2^8-1)"]
        );
    }
}
