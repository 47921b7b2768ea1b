//! Constructors for the named group families.
//!
//! Every constructor fixes a documented element order with the identity at
//! index 0, so serialized groups are reproducible byte-for-byte. All returned
//! tables pass the full construction checks (Latin square, identity,
//! inverses, associativity).

use super::subset::MAX_UNIVERSE;
use super::{ElementId, GroupTable, SubgroupInfo};
use crate::error::{Error, Result};

fn table_order_checked(order: usize) -> Result<usize> {
    if order == 0 {
        return Err(Error::Construction("group order must be positive".into()));
    }
    if order > MAX_UNIVERSE {
        return Err(Error::MaxOrderExceeded {
            requested: order,
            bound: MAX_UNIVERSE,
        });
    }
    Ok(order)
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some(p)` when `m` is a non-trivial prime power `p^e` with `e ≥ 1`.
pub fn prime_power_base(m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let p = (2..=m).find(|d| m % d == 0).expect("m >= 2 has a prime factor");
    let mut rest = m;
    while rest % p == 0 {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// The trivial group.
pub fn trivial() -> GroupTable {
    cyclic(1).expect("C1 always constructs")
}

/// Cyclic group of order `k`; element `i` is `g^i`.
pub fn cyclic(k: u32) -> Result<GroupTable> {
    let n = table_order_checked(k as usize)?;
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| if i == 0 { "e".into() } else { power_label("g", i) })
        .collect();
    GroupTable::from_parts(format!("C{k}"), labels, mul)
}

/// Direct product; element `(i, j)` sits at index `i·|b| + j` and is labeled
/// `(la,lb)`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let (na, nb) = (a.order(), b.order());
    let n = table_order_checked(na.checked_mul(nb).ok_or_else(|| {
        Error::Construction("direct product order overflows".into())
    })?)?;
    let idx = |i: usize, j: usize| i * nb + j;
    let mut mul = vec![0u16; n * n];
    for i1 in 0..na {
        for j1 in 0..nb {
            for i2 in 0..na {
                for j2 in 0..nb {
                    let p = a.mul(ElementId::new(i1), ElementId::new(i2)).index();
                    let q = b.mul(ElementId::new(j1), ElementId::new(j2)).index();
                    mul[idx(i1, j1) * n + idx(i2, j2)] = idx(p, q) as u16;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for i in 0..na {
        for j in 0..nb {
            labels.push(format!("({},{})", a.labels()[i], b.labels()[j]));
        }
    }
    GroupTable::from_parts(format!("{}x{}", a.name(), b.name()), labels, mul)
}

/// Dihedral group of the given (even) order `2m`: rotations `r^i` at indices
/// `0..m`, reflections `s·r^i` at `m..2m`.
pub fn dihedral(order: u32) -> Result<GroupTable> {
    if order % 2 != 0 || order == 0 {
        return Err(Error::Construction(format!(
            "dihedral order must be even and positive, got {order}"
        )));
    }
    let n = table_order_checked(order as usize)?;
    let m = n / 2;
    let rot = |i: usize| i % m;
    let refl = |i: usize| m + i % m;
    let mut mul = vec![0u16; n * n];
    for i in 0..m {
        for j in 0..m {
            // r^i · r^j = r^{i+j}
            mul[rot(i) * n + rot(j)] = rot(i + j) as u16;
            // r^i · s r^j = s r^{j-i}
            mul[rot(i) * n + refl(j)] = refl(m + j - i) as u16;
            // s r^i · r^j = s r^{i+j}
            mul[refl(i) * n + rot(j)] = refl(i + j) as u16;
            // s r^i · s r^j = r^{j-i}
            mul[refl(i) * n + refl(j)] = rot(m + j - i) as u16;
        }
    }
    let mut labels: Vec<String> = (0..m)
        .map(|i| if i == 0 { "e".into() } else { power_label("r", i) })
        .collect();
    labels.extend((0..m).map(|i| format!("s{}", power_label("r", i))));
    GroupTable::from_parts(format!("D{order}"), labels, mul)
}

/// Dicyclic group of order `4m`: `⟨a, x | a^{2m} = 1, x² = a^m,
/// x a x⁻¹ = a⁻¹⟩` with `a^i` at indices `0..2m` and `x·a^i` at `2m..4m`.
/// Order 8 gives the quaternion group.
pub fn dicyclic(order: u32) -> Result<GroupTable> {
    if order % 4 != 0 || order == 0 {
        return Err(Error::Construction(format!(
            "dicyclic order must be a positive multiple of 4, got {order}"
        )));
    }
    let n = table_order_checked(order as usize)?;
    let half = n / 2; // 2m
    let m = n / 4;
    let rot = |i: usize| i % half;
    let flip = |i: usize| half + i % half;
    let mut mul = vec![0u16; n * n];
    for i in 0..half {
        for j in 0..half {
            // a^i · a^j = a^{i+j}
            mul[rot(i) * n + rot(j)] = rot(i + j) as u16;
            // a^i · x a^j = x a^{j-i}
            mul[rot(i) * n + flip(j)] = flip(half + j - i) as u16;
            // x a^i · a^j = x a^{i+j}
            mul[flip(i) * n + rot(j)] = flip(i + j) as u16;
            // x a^i · x a^j = a^{m+j-i}
            mul[flip(i) * n + flip(j)] = rot(half + m + j - i) as u16;
        }
    }
    let mut labels: Vec<String> = (0..half)
        .map(|i| if i == 0 { "e".into() } else { power_label("a", i) })
        .collect();
    labels.extend((0..half).map(|i| format!("x{}", power_label("a", i))));
    let name = if order.is_power_of_two() {
        format!("Q{order}")
    } else {
        format!("Dic{m}")
    };
    GroupTable::from_parts(name, labels, mul)
}

/// One-line notation: `perm[i]` is the image of point `i`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p · q)(i) = p(q(i)): apply q first.
    q.iter().map(|&i| p[i]).collect()
}

fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut p = start;
        let mut first = true;
        while !seen[p] {
            seen[p] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(p + 1).to_string());
            first = false;
            p = perm[p];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn permutation_table(name: String, perms: Vec<Vec<usize>>) -> Result<GroupTable> {
    let n = perms.len();
    let index_of: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut mul = vec![0u16; n * n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let prod = compose(p, q);
            let k = *index_of
                .get(prod.as_slice())
                .ok_or_else(|| Error::Construction("permutation set is not closed".into()))?;
            mul[i * n + j] = k as u16;
        }
    }
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    GroupTable::from_parts(name, labels, mul)
}

/// Symmetric group on `n` points; elements are all permutations sorted
/// lexicographically by one-line notation (the identity is first), composed
/// right-to-left and labeled in cycle notation on 1-based points.
pub fn symmetric(n: u32) -> Result<GroupTable> {
    let deg = n as usize;
    let mut order: usize = 1;
    for i in 2..=deg {
        order = order.saturating_mul(i);
    }
    table_order_checked(order.max(1))?;
    let mut perms = vec![(0..deg).collect::<Vec<usize>>()];
    // Lexicographic successor, textbook next-permutation.
    loop {
        let last = perms.last().unwrap();
        let mut p = last.clone();
        let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        perms.push(p);
    }
    permutation_table(format!("S{n}"), perms)
}

/// Closure of the given generators inside the symmetric group on `degree`
/// points. Elements are sorted lexicographically by one-line notation, so the
/// element order is independent of the generator order.
pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<GroupTable> {
    for g in gens {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Construction(format!(
                "{g:?} is not a permutation of 0..{degree}"
            )));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut seen = std::collections::HashSet::new();
    let mut elements = vec![identity.clone()];
    seen.insert(identity);
    let mut head = 0;
    while head < elements.len() {
        let w = elements[head].clone();
        head += 1;
        for g in gens {
            let prod = compose(&w, g);
            if seen.insert(prod.clone()) {
                if elements.len() >= MAX_UNIVERSE {
                    return Err(Error::MaxOrderExceeded {
                        requested: elements.len() + 1,
                        bound: MAX_UNIVERSE,
                    });
                }
                elements.push(prod);
            }
        }
    }
    elements.sort();
    let name = format!("Perm{}_{}", degree, elements.len());
    permutation_table(name, elements)
}

/// `C_m ⋊ C_k` with the action `y x y⁻¹ = x^t`, where `x` generates `C_m`
/// and `y` generates `C_k`. Requires `t^k ≡ 1 (mod m)` so that the action is
/// an automorphism of order dividing `k`. Element `x^a y^b` sits at index
/// `b·m + a`.
pub fn semidirect_cyclic(m: u32, k: u32, t: u32) -> Result<GroupTable> {
    let (m64, k64) = (m as u64, k as u64);
    if m == 0 || k == 0 {
        return Err(Error::Construction("semidirect factors must be positive".into()));
    }
    let n = table_order_checked((m64 * k64) as usize)?;
    let t64 = if m64 == 1 { 0 } else { t as u64 % m64 };
    if mod_pow(t64, k64, m64) != 1 % m64 {
        return Err(Error::Construction(format!(
            "invalid action exponent: {t}^{k} is not 1 mod {m}"
        )));
    }
    // t^b mod m for b in 0..k.
    let tb: Vec<u64> = (0..k64).scan(1 % m64.max(1), |acc, _| {
        let out = *acc;
        *acc = *acc * t64 % m64;
        Some(out)
    })
    .collect();
    let m = m as usize;
    let idx = |a: usize, b: usize| b * m + a;
    let mut mul = vec![0u16; n * n];
    for b1 in 0..k as usize {
        for a1 in 0..m {
            for b2 in 0..k as usize {
                for a2 in 0..m {
                    let a = (a1 as u64 + a2 as u64 * tb[b1]) % m64;
                    let b = (b1 + b2) % k as usize;
                    mul[idx(a1, b1) * n + idx(a2, b2)] = idx(a as usize, b) as u16;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for b in 0..k as usize {
        for a in 0..m {
            let l = format!("{}{}", power_label("x", a), power_label("y", b));
            labels.push(if l.is_empty() { "e".into() } else { l });
        }
    }
    GroupTable::from_parts(format!("C{m}:C{k}:{t}"), labels, mul)
}

/// Heisenberg group over `F_p`: triples `(a, b, c)` with
/// `(a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b')`, index `a·p² + b·p + c`.
/// For odd primes this is the non-abelian group of order `p³` and exponent
/// `p`.
pub fn heisenberg(p: u32) -> Result<GroupTable> {
    if !is_prime(p as u64) {
        return Err(Error::Construction(format!("{p} is not prime")));
    }
    let p = p as usize;
    let n = table_order_checked(p * p * p)?;
    let idx = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut mul = vec![0u16; n * n];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let t = idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
                            mul[idx(a1, b1, c1) * n + idx(a2, b2, c2)] = t as u16;
                        }
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                labels.push(format!("({a},{b},{c})"));
            }
        }
    }
    GroupTable::from_parts(format!("He{p}"), labels, mul)
}

/// Modular `p`-group of order `p^e`: `⟨x, y | x^{p^{e-1}} = y^p = 1,
/// y x y⁻¹ = x^{p^{e-2}+1}⟩`, realized as `semidirect_cyclic(p^{e-1}, p,
/// p^{e-2}+1)`. Needs `e ≥ 3` for odd `p` and `e ≥ 4` for `p = 2`.
pub fn modular(p: u32, e: u32) -> Result<GroupTable> {
    if !is_prime(p as u64) {
        return Err(Error::Construction(format!("{p} is not prime")));
    }
    let min_e = if p == 2 { 4 } else { 3 };
    if e < min_e {
        return Err(Error::Construction(format!(
            "modular group needs exponent e >= {min_e} for p = {p}, got {e}"
        )));
    }
    let order = (p as u64).checked_pow(e).filter(|&o| o <= MAX_UNIVERSE as u64);
    let Some(order) = order else {
        return Err(Error::MaxOrderExceeded {
            requested: usize::MAX,
            bound: MAX_UNIVERSE,
        });
    };
    let m = (p as u64).pow(e - 1) as u32;
    let t = (p as u64).pow(e - 2) as u32 + 1;
    Ok(semidirect_cyclic(m, p, t)?.renamed(format!("M{order}")))
}

/// Central product `a ∘ b`: the quotient of `a × b` by the diagonal
/// `⟨(z1, z2⁻¹)⟩`, where `z1, z2` are central of the same prime order.
/// Cosets are ordered and labeled by their minimal `(i, j)` representative
/// (pair index `i·|b| + j`).
pub fn central_product(
    a: &GroupTable,
    z1: ElementId,
    b: &GroupTable,
    z2: ElementId,
) -> Result<GroupTable> {
    let p = a.order_of(z1);
    if p != b.order_of(z2) {
        return Err(Error::Construction(format!(
            "central elements have different orders {} and {}",
            p,
            b.order_of(z2)
        )));
    }
    if !is_prime(p) {
        return Err(Error::Construction(format!(
            "central product identifies subgroups of prime order, got order {p}"
        )));
    }
    let central = |g: &GroupTable, z: ElementId| g.elements().all(|x| g.mul(x, z) == g.mul(z, x));
    if !central(a, z1) || !central(b, z2) {
        return Err(Error::Construction(
            "central product requires central identification elements".into(),
        ));
    }
    let (na, nb) = (a.order(), b.order());
    let pairs = na * nb;
    let order = table_order_checked(pairs / p as usize)?;

    // Coset of (i, j) under right translation by (z1, z2⁻¹)^s.
    let mut coset_of = vec![u16::MAX; pairs];
    let mut reps: Vec<(usize, usize)> = Vec::with_capacity(order);
    for i in 0..na {
        for j in 0..nb {
            if coset_of[i * nb + j] != u16::MAX {
                continue;
            }
            let c = reps.len() as u16;
            reps.push((i, j));
            let (mut x, mut y) = (ElementId::new(i), ElementId::new(j));
            for _ in 0..p {
                coset_of[x.index() * nb + y.index()] = c;
                x = a.mul(x, z1);
                y = b.mul(y, b.inv(z2));
            }
        }
    }
    debug_assert_eq!(reps.len(), order);

    let mut mul = vec![0u16; order * order];
    for (c1, &(i1, j1)) in reps.iter().enumerate() {
        for (c2, &(i2, j2)) in reps.iter().enumerate() {
            let i = a.mul(ElementId::new(i1), ElementId::new(i2)).index();
            let j = b.mul(ElementId::new(j1), ElementId::new(j2)).index();
            mul[c1 * order + c2] = coset_of[i * nb + j];
        }
    }
    let labels = reps
        .iter()
        .map(|&(i, j)| format!("({},{})", a.labels()[i], b.labels()[j]))
        .collect();
    GroupTable::from_parts(format!("{}o{}", a.name(), b.name()), labels, mul)
}

/// Central product along the canonical joint center: picks the smallest
/// prime `p` with central elements of order `p` on both sides and identifies
/// the lowest-indexed such elements.
pub fn central_product_joint(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let central_of_order = |g: &GroupTable, p: u64| {
        g.elements().find(|&z| {
            g.order_of(z) == p && g.elements().all(|x| g.mul(x, z) == g.mul(z, x))
        })
    };
    for p in 2..=a.order() as u64 {
        if !is_prime(p) {
            continue;
        }
        if let (Some(z1), Some(z2)) = (central_of_order(a, p), central_of_order(b, p)) {
            return central_product(a, z1, b, z2);
        }
    }
    Err(Error::Construction(format!(
        "{} and {} share no central prime order",
        a.name(),
        b.name()
    )))
}

/// Quotient `g / N` for a normal subgroup `N`. Cosets are enumerated and
/// labeled by their minimal representative.
pub fn quotient(g: &GroupTable, nsub: &SubgroupInfo) -> Result<GroupTable> {
    if nsub.elements.universe() != g.order() || !g.is_subgroup(&nsub.elements) {
        return Err(Error::Construction(
            "quotient requires a subgroup of the same group".into(),
        ));
    }
    let normal = g
        .elements()
        .all(|x| nsub.elements.iter().all(|h| nsub.elements.contains(g.conjugate(x, h))));
    if !normal {
        return Err(Error::Construction("quotient requires a normal subgroup".into()));
    }
    let n = g.order();
    let k = nsub.order();
    let order = n / k;
    let mut coset_of = vec![u16::MAX; n];
    let mut reps = Vec::with_capacity(order);
    for x in g.elements() {
        if coset_of[x.index()] != u16::MAX {
            continue;
        }
        let c = reps.len() as u16;
        reps.push(x);
        for h in nsub.elements.iter() {
            coset_of[g.mul(x, h).index()] = c;
        }
    }
    let mut mul = vec![0u16; order * order];
    for (c1, &x) in reps.iter().enumerate() {
        for (c2, &y) in reps.iter().enumerate() {
            mul[c1 * order + c2] = coset_of[g.mul(x, y).index()];
        }
    }
    let labels = reps.iter().map(|&x| format!("[{}]", g.label(x))).collect();
    GroupTable::from_parts(format!("{}/N{}", g.name(), k), labels, mul)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn transposition_products_are_three_cycles() {
        let s3 = symmetric(3).unwrap();
        let t1 = s3.element_by_label("(1 2)").unwrap();
        let t2 = s3.element_by_label("(1 3)").unwrap();
        let prod = s3.mul(t1, t2);
        assert_eq!(s3.order_of(prod), 3);
        assert_eq!(s3.element_power(t1, 2), s3.identity());
    }

    #[test]
    fn symmetric_orders_and_bounds() {
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert!(matches!(
            symmetric(6),
            Err(Error::MaxOrderExceeded { .. })
        ));
    }

    #[test]
    fn dihedral_d8_statistics() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.order_statistics(), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
        assert_eq!(d8.exponent(), 4);
        assert!(!d8.is_abelian());
    }

    #[test]
    fn quaternion_q8_statistics() {
        let q8 = dicyclic(8).unwrap();
        assert_eq!(q8.name(), "Q8");
        assert_eq!(q8.order_statistics(), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    }

    #[test]
    fn dicyclic_twelve() {
        let dic3 = dicyclic(12).unwrap();
        assert_eq!(dic3.name(), "Dic3");
        assert_eq!(
            dic3.order_statistics(),
            BTreeMap::from([(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)])
        );
    }

    #[test]
    fn modular_m16() {
        let m16 = modular(2, 4).unwrap();
        assert_eq!(m16.name(), "M16");
        assert_eq!(m16.order(), 16);
        assert_eq!(m16.exponent(), 8);
        assert_eq!(
            m16.order_statistics(),
            BTreeMap::from([(1, 1), (2, 3), (4, 4), (8, 8)])
        );
    }

    #[test]
    fn modular_m27() {
        let m27 = modular(3, 3).unwrap();
        assert_eq!(m27.order(), 27);
        assert_eq!(m27.exponent(), 9);
        assert_eq!(m27.order_statistics(), BTreeMap::from([(1, 1), (3, 8), (9, 18)]));
    }

    #[test]
    fn heisenberg_has_exponent_p() {
        let he3 = heisenberg(3).unwrap();
        assert_eq!(he3.order(), 27);
        assert_eq!(he3.exponent(), 3);
        assert!(!he3.is_abelian());
        for x in he3.elements().skip(1) {
            assert_eq!(he3.order_of(x), 3);
        }
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        assert!(matches!(
            semidirect_cyclic(4, 4, 2),
            Err(Error::Construction(_))
        ));
        // t = 3 has 3^4 = 81 = 1 mod 4.
        let g = semidirect_cyclic(4, 4, 3).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(
            g.order_statistics(),
            BTreeMap::from([(1, 1), (2, 3), (4, 12)])
        );
    }

    #[test]
    fn central_product_of_two_d8() {
        let d8 = dihedral(8).unwrap();
        let z = d8.element_by_label("r^2").unwrap();
        let g = central_product(&d8, z, &d8, z).unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(g.name(), "D8oD8");
        assert_eq!(
            g.order_statistics(),
            BTreeMap::from([(1, 1), (2, 19), (4, 12)])
        );
    }

    #[test]
    fn central_product_joint_q8_d8() {
        let q8 = dicyclic(8).unwrap();
        let d8 = dihedral(8).unwrap();
        let g = central_product_joint(&q8, &d8).unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(
            g.order_statistics(),
            BTreeMap::from([(1, 1), (2, 11), (4, 20)])
        );
    }

    #[test]
    fn central_product_rejects_non_central() {
        let d8 = dihedral(8).unwrap();
        let s = d8.element_by_label("s").unwrap();
        assert!(central_product(&d8, s, &d8, s).is_err());
    }

    #[test]
    fn quotient_c4_by_c2() {
        let c4 = cyclic(4).unwrap();
        let sub = c4.subgroup_closure(&[ElementId::new(2)]);
        let q = quotient(&c4, &sub).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.order_statistics(), BTreeMap::from([(1, 1), (2, 1)]));
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = symmetric(3).unwrap();
        let t = s3.element_by_label("(1 2)").unwrap();
        let sub = s3.subgroup_closure(&[t]);
        assert!(quotient(&s3, &sub).is_err());
    }

    #[test]
    fn alternating_four_via_permutations() {
        // (1 2 3) and (1 2)(3 4).
        let a4 = from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
            .unwrap()
            .renamed("A4");
        assert_eq!(a4.order(), 12);
        assert_eq!(
            a4.order_statistics(),
            BTreeMap::from([(1, 1), (2, 3), (3, 8)])
        );
    }

    #[test]
    fn from_permutations_rejects_garbage() {
        assert!(from_permutations(3, &[vec![0, 0, 1]]).is_err());
        assert!(from_permutations(3, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn permutation_element_order_is_generator_independent() {
        let a = from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap();
        let b = from_permutations(4, &[vec![1, 0, 3, 2], vec![1, 2, 0, 3]]).unwrap();
        assert_eq!(a.labels(), b.labels());
    }

    #[test]
    fn cyclic_rejects_zero() {
        assert!(cyclic(0).is_err());
    }
}
