//! Exact linear algebra over a commutative base field.

use crate::ring::BaseRing;
use crate::scalar::ParamScalar;

/// Solves `Σ x_j · cols[j] = target`, returning one solution (free variables set to zero).
/// Pivots are chosen as the first nonzero entry, so results are deterministic.
pub fn solve<R: BaseRing>(ring: &R, cols: &[Vec<R::Elem>], target: &[R::Elem]) -> Option<Vec<R::Elem>> {
    let nrows = target.len();
    let ncols = cols.len();
    // Augmented matrix, row-major.
    let mut m: Vec<Vec<R::Elem>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<R::Elem> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !ring.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = ring.inverse(&m[r][c]).expect("nonzero field element");
        for v in m[r].iter_mut() {
            *v = ring.mul(&inv, v);
        }
        for i in 0..nrows {
            if i != r && !ring.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let t = ring.mul(&f, &m[r][j]);
                    m[i][j] = ring.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if m[r..].iter().any(|row| !ring.is_zero(&row[ncols])) {
        return None;
    }
    let mut x = vec![ring.zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}

/// Whether `target` lies in the span of `cols`, by column elimination from the
/// last coordinate down. Each pivot is the smallest entry by `size`, which keeps
/// fill-in low on the nearly triangular matrices that word multiples produce.
pub fn in_span<R: BaseRing>(
    ring: &R,
    cols: &[Vec<R::Elem>],
    target: &[R::Elem],
    size: impl Fn(&R::Elem) -> usize,
) -> bool {
    let mut open: Vec<Vec<R::Elem>> = cols.to_vec();
    let mut t = target.to_vec();
    for i in (0..t.len()).rev() {
        let pivot = (0..open.len())
            .filter(|&j| !ring.is_zero(&open[j][i]))
            .min_by_key(|&j| size(&open[j][i]));
        let Some(p) = pivot else {
            if !ring.is_zero(&t[i]) {
                return false;
            }
            continue;
        };
        let col = open.swap_remove(p);
        let inv = ring.inverse(&col[i]).expect("nonzero field element");
        let eliminate = |v: &mut Vec<R::Elem>| {
            if ring.is_zero(&v[i]) {
                return;
            }
            let f = ring.mul(&v[i], &inv);
            for k in 0..i {
                if !ring.is_zero(&col[k]) {
                    v[k] = ring.sub(&v[k], &ring.mul(&f, &col[k]));
                }
            }
            v[i] = ring.zero();
        };
        for v in open.iter_mut() {
            eliminate(v);
        }
        eliminate(&mut t);
    }
    true
}

/// Degree of numerator plus denominator; the pivot size for [`in_span`] over `K(s)`.
pub fn ratfunc_size(c: &ParamScalar) -> usize {
    c.as_ratfunc()
        .map_or(0, |r| r.numer().degree().unwrap_or(0) + r.denom().degree().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Sampler;
    use crate::ring::FieldPreset;
    use proptest::prelude::*;

    #[test]
    fn solves_and_detects_inconsistency() {
        let k = FieldPreset::qs_order2();
        let s = k.s();
        let one = k.one();
        let zero = k.zero();
        // columns (1, s) and (0, 1); target (2, 3)
        let cols = vec![vec![one.clone(), s.clone()], vec![zero.clone(), one.clone()]];
        let target = vec![k.int(2), k.int(3)];
        let x = solve(&k, &cols, &target).unwrap();
        assert_eq!(x[0], k.int(2));
        assert_eq!(x[1], k.sub(&k.int(3), &k.mul(&k.int(2), &s)));
        // single column (1, s) cannot reach (1, 0)
        let cols = vec![vec![one.clone(), s]];
        assert!(solve(&k, &cols, &[one.clone(), zero.clone()]).is_none());
        assert!(!in_span(&k, &cols, &[one.clone(), zero.clone()], ratfunc_size));
        let s = k.s();
        let cols = vec![vec![one.clone(), s.clone()], vec![zero.clone(), one.clone()]];
        let half_s = k.mul(&s, &k.inverse(&k.int(2)).unwrap());
        let target = vec![k.inverse(&s).unwrap(), half_s];
        assert!(in_span(&k, &cols, &target, ratfunc_size));
        assert!(in_span(&k, &cols[..1], &[zero.clone(), zero], ratfunc_size));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn elimination_agrees_with_solve(seed in any::<u64>(), rows in 1usize..6, ncols in 0usize..6) {
            let k = FieldPreset::qs_order2();
            let mut s = Sampler::new(seed);
            // Sparse entries so that dependent columns and unreachable targets both occur.
            let entry = |s: &mut Sampler| if s.int(0, 2) == 0 { s.scalar(k.flavor()) } else { k.zero() };
            let cols: Vec<Vec<_>> = (0..ncols).map(|_| (0..rows).map(|_| entry(&mut s)).collect()).collect();
            let target: Vec<_> = if s.coin() && ncols > 0 {
                // A combination of the columns.
                let c: Vec<_> = (0..ncols).map(|_| s.scalar(k.flavor())).collect();
                (0..rows).map(|i| (0..ncols).fold(k.zero(), |acc, j| k.add(&acc, &k.mul(&c[j], &cols[j][i])))).collect()
            } else {
                (0..rows).map(|_| entry(&mut s)).collect()
            };
            let expected = solve(&k, &cols, &target).is_some();
            prop_assert_eq!(in_span(&k, &cols, &target, ratfunc_size), expected);
        }
    }
}
