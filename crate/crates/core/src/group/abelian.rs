//! Primary decomposition of finite abelian groups.
//!
//! An abelian group decomposes uniquely as a direct sum of cyclic groups of
//! prime-power order. The invariants are recovered from order statistics
//! alone: for each prime `p`, the count `ω_i = #{x : o(x) | p^i}` determines
//! how many cyclic factors have exponent at least `i`.

use super::GroupTable;
use crate::error::{Error, Result};
use num_integer::Integer;

/// Invariant factors of an abelian group in primary form.
///
/// `prime_powers` lists one `(p, a)` entry per cyclic factor `C_{p^a}`,
/// sorted by prime ascending and exponent descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianDecomposition {
    pub prime_powers: Vec<(u64, u32)>,
}

impl AbelianDecomposition {
    pub fn order(&self) -> u64 {
        self.prime_powers.iter().map(|&(p, a)| p.pow(a)).product()
    }

    pub fn exponent(&self) -> u64 {
        self.prime_powers
            .iter()
            .fold(1u64, |l, &(p, a)| l.lcm(&p.pow(a)))
    }

    /// Size of the kernel of `x ↦ x^n`: the product of `gcd(n, p^a)` over
    /// all cyclic factors.
    pub fn kernel_size_of_power_map(&self, n: u64) -> u64 {
        self.prime_powers
            .iter()
            .map(|&(p, a)| n.gcd(&p.pow(a)))
            .product()
    }
}

/// Compute the primary decomposition of an abelian group.
pub fn decompose(g: &GroupTable) -> Result<AbelianDecomposition> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian(g.name().to_string()));
    }
    let order = g.order() as u64;
    let mut prime_powers = Vec::new();
    let mut rest = order;
    let mut p = 2u64;
    while rest > 1 {
        while p * p <= rest && rest % p != 0 {
            p += 1;
        }
        let p = if p * p > rest { rest } else { p };
        let mut p_part = 1u64;
        while rest % p == 0 {
            p_part *= p;
            rest /= p;
        }
        // d[i] = number of cyclic p-factors of exponent >= i+1, read off the
        // growth of ω_i = #{x : o(x) divides p^i}.
        let mut d = Vec::new();
        let mut omega_prev = 1u64;
        let mut cap = 1u64;
        while omega_prev < p_part {
            cap *= p;
            let omega = g
                .elements()
                .filter(|&x| cap % g.order_of(x) == 0)
                .count() as u64;
            assert_eq!(
                omega % omega_prev,
                0,
                "order statistics of an abelian group grow by powers of p"
            );
            let mut ratio = omega / omega_prev;
            let mut log = 0u32;
            while ratio > 1 {
                assert_eq!(ratio % p, 0, "fiber growth must be a power of p");
                ratio /= p;
                log += 1;
            }
            d.push(log);
            omega_prev = omega;
        }
        for i in 1..=d.len() {
            let here = d[i - 1];
            let deeper = d.get(i).copied().unwrap_or(0);
            for _ in 0..(here - deeper) {
                prime_powers.push((p, i as u32));
            }
        }
    }
    prime_powers.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let decomposition = AbelianDecomposition { prime_powers };
    assert_eq!(
        decomposition.order(),
        order,
        "decomposition must multiply back to the group order"
    );
    Ok(decomposition)
}
