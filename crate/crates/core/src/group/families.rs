use crate::exact::is_prime;

use super::{GroupError, PermGroup, Permutation};

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

fn cycle_on(n: usize) -> Permutation {
    Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap()
}

pub fn trivial() -> PermGroup {
    PermGroup::new(1, Vec::new()).unwrap()
}

/// `C_n` as the rotation group of an `n`-gon.
pub fn cyclic(n: u64) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("cyclic group order must be at least 1"));
    }
    let n = n as usize;
    PermGroup::new(n, vec![cycle_on(n)])
}

/// Dihedral group of the given **order** (`D_2n` has order `2n`).
///
/// Order 2 gives `C_2`, order 4 the Klein four-group in its regular action,
/// and order `2n` with `n >= 3` the symmetries of an `n`-gon.
pub fn dihedral(order: u64) -> Result<PermGroup, GroupError> {
    if order < 2 || order % 2 == 1 {
        return Err(invalid(format!(
            "dihedral order must be even and at least 2, got {order}"
        )));
    }
    let n = (order / 2) as usize;
    match n {
        1 => cyclic(2),
        2 => PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?,
                Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?,
            ],
        ),
        _ => {
            let reflection = Permutation::from_images(
                (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect(),
            )?;
            PermGroup::new(n, vec![cycle_on(n), reflection])
        }
    }
}

pub fn symmetric(n: u64) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("symmetric group degree must be at least 1"));
    }
    let n = n as usize;
    if n == 1 {
        return Ok(trivial());
    }
    PermGroup::new(
        n,
        vec![Permutation::from_cycles(n, &[&[0, 1]])?, cycle_on(n)],
    )
}

pub fn alternating(n: u64) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("alternating group degree must be at least 1"));
    }
    let n = n as usize;
    let gens = (2..n as u32)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>, _>>()?;
    PermGroup::new(n, gens)
}

/// Product of quaternion units `{1, i, j, k}` (indices 0..4): `(sign, unit)`.
fn unit_product(a: usize, b: usize) -> (bool, usize) {
    const TABLE: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    TABLE[a][b]
}

/// `Q_8` in its right regular action; point `4s + u` is `(-1)^s * unit_u`.
pub fn quaternion8() -> Result<PermGroup, GroupError> {
    let right_mul = |g: usize| {
        let images = (0..8usize)
            .map(|x| {
                let (neg, u) = unit_product(x % 4, g);
                let sign = (x / 4 == 1) ^ neg;
                (u + if sign { 4 } else { 0 }) as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    PermGroup::new(8, vec![right_mul(1)?, right_mul(2)?])
}

fn multiplicative_order(r: u64, p: u64) -> u64 {
    let r = r % p;
    if r == 0 {
        return 0;
    }
    let mut x = r;
    let mut k = 1;
    while x != 1 {
        x = x * r % p;
        k += 1;
    }
    k
}

/// Validates metacyclic parameters and resolves `r = 0` to the automatic root.
pub fn metacyclic_root(p: u64, q: u64, r: u64) -> Result<u64, GroupError> {
    if p == 2 || !is_prime(p) {
        return Err(invalid(format!("metacyclic: p = {p} is not an odd prime")));
    }
    if q <= 1 || !(p - 1).is_multiple_of(q) {
        return Err(invalid(format!(
            "metacyclic: q = {q} must exceed 1 and divide p - 1 = {}",
            p - 1
        )));
    }
    if r == 0 {
        return Ok(metacyclic_auto_root(p, q).expect("units mod p form a cyclic group"));
    }
    if multiplicative_order(r, p) != q {
        return Err(invalid(format!(
            "metacyclic: r = {r} does not have multiplicative order {q} modulo {p}"
        )));
    }
    Ok(r % p)
}

/// Smallest `r` in `2..p` of multiplicative order exactly `q` modulo `p`.
pub fn metacyclic_auto_root(p: u64, q: u64) -> Option<u64> {
    (2..p).find(|&r| multiplicative_order(r, p) == q)
}

/// The affine group `{x -> a x + b : a in <r>}` on `Z_p`, of order `p q`.
///
/// Requires `p` an odd prime, `q > 1` dividing `p - 1`, and `r` of
/// multiplicative order exactly `q` modulo `p`.  `r = 0` picks the smallest
/// such residue.
pub fn metacyclic(p: u64, q: u64, r: u64) -> Result<PermGroup, GroupError> {
    let r = metacyclic_root(p, q, r)?;
    let n = p as usize;
    let scale = Permutation::from_images((0..p).map(|x| (x * r % p) as u32).collect())?;
    PermGroup::new(n, vec![cycle_on(n), scale])
}

/// Decides `G ≅ H` for two groups of order `2p`, `p` an odd prime.
///
/// Up to isomorphism there are exactly two such groups, `C_2p` and `D_2p`,
/// so the answer is whether both or neither are cyclic.  Any other order is
/// rejected.
pub fn is_isomorphic_small(g: &PermGroup, h: &PermGroup) -> Result<bool, GroupError> {
    let n = g.order() as u64;
    if n != h.order() as u64 || !n.is_multiple_of(2) || n / 2 == 2 || !is_prime(n / 2) {
        return Err(GroupError::Precondition(format!(
            "isomorphism is only decided for two groups of order 2p with p an odd prime (got {} and {})",
            g.order(),
            h.order()
        )));
    }
    Ok(g.is_cyclic() == h.is_cyclic())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn advertised_orders() {
        for n in 1..=12 {
            assert_eq!(cyclic(n).unwrap().order() as u64, n);
        }
        for order in (2..=24).step_by(2) {
            assert_eq!(dihedral(order).unwrap().order() as u64, order);
        }
        let fact = [1u64, 1, 2, 6, 24, 120];
        for n in 1..=5u64 {
            assert_eq!(symmetric(n).unwrap().order() as u64, fact[n as usize]);
            assert_eq!(
                alternating(n).unwrap().order() as u64,
                (fact[n as usize] / 2).max(1)
            );
        }
        assert_eq!(quaternion8().unwrap().order(), 8);
        assert_eq!(metacyclic(7, 3, 2).unwrap().order(), 21);
        assert_eq!(metacyclic(5, 4, 0).unwrap().order(), 20);
    }

    #[test]
    fn dihedral_six_is_symmetric_three() {
        assert_eq!(
            dihedral(6).unwrap().order_statistics(),
            symmetric(3).unwrap().order_statistics()
        );
        assert_eq!(
            dihedral(4).unwrap().order_statistics().entries(),
            &[(1, 1), (2, 3)]
        );
    }

    #[test]
    fn metacyclic_validation() {
        assert!(metacyclic(7, 4, 0).is_err());
        assert!(metacyclic(9, 2, 0).is_err());
        assert!(metacyclic(2, 1, 0).is_err());
        assert!(metacyclic(7, 3, 3).is_err()); // 3 has order 6 mod 7
        assert!(metacyclic(7, 3, 1).is_err());
        assert_eq!(metacyclic_auto_root(7, 3), Some(2));
        assert_eq!(metacyclic_auto_root(13, 3), Some(3));
    }

    #[test]
    fn small_isomorphism() {
        let s3 = symmetric(3).unwrap();
        let d6 = dihedral(6).unwrap();
        let c6 = cyclic(6).unwrap();
        assert_eq!(is_isomorphic_small(&s3, &d6), Ok(true));
        assert_eq!(is_isomorphic_small(&c6, &d6), Ok(false));
        let f21 = metacyclic(7, 3, 2).unwrap();
        assert!(is_isomorphic_small(&f21, &cyclic(21).unwrap()).is_err());
        assert!(is_isomorphic_small(&dihedral(4).unwrap(), &cyclic(4).unwrap()).is_err());
    }
}
