use std::collections::BTreeMap;

use num_rational::BigRational;

use super::{BaseRing, Twist};
use crate::error::{Error, Result};
use crate::scalar::{Flavor, ParamScalar, ScalarContext};
use crate::text::{coefficient_term, join_terms};

/// Exponent vector `(a, b, c)` of the monomial `z1^a z2^b z3^c`.
pub type Exponent = [i64; 3];

/// Element of the quantum torus, stored as `Σ c · z1^a z2^b z3^c` with scalars on the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TorusElement {
    terms: BTreeMap<Exponent, ParamScalar>,
}

impl TorusElement {
    pub fn zero() -> TorusElement {
        TorusElement::default()
    }

    pub fn monomial(c: ParamScalar, e: Exponent) -> TorusElement {
        let mut t = TorusElement::zero();
        t.accumulate(e, c);
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &Exponent) -> Option<&ParamScalar> {
        self.terms.get(e)
    }

    fn accumulate(&mut self, e: Exponent, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn add(&self, o: &TorusElement) -> TorusElement {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.accumulate(*e, c.clone());
        }
        r
    }

    fn neg(&self) -> TorusElement {
        TorusElement {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

type Mono = (ParamScalar, Exponent);

/// An automorphism determined by monomial images of `z1, z2, z3`.
#[derive(Clone, Debug)]
struct MonomialAuto {
    images: [Mono; 3],
}

/// `ℚ(q, t^{1/2})`-quantum torus on `z1, z2, z3` with `z1 z2 = z2 z1`, `z3 z_i = q z_i z3` (`i = 1, 2`).
///
/// `τ1` swaps `z1` and `z2`, `τ2` sends `z1 ↦ z2`, `z2 ↦ q^-1 z1`, and both fix `z3`.
/// `δ1(u) = -α (z1 + z2)(z1 - z2)^{-1}(u - τ1(u))` with `α = (h - h^-1)/2`; `δ2 = 0`.
#[derive(Clone, Debug)]
pub struct QuantumTorus {
    scalars: ScalarContext,
    alpha: ParamScalar,
    autos: [MonomialAuto; 2],
    inverse_autos: [MonomialAuto; 2],
}

impl QuantumTorus {
    pub fn new(scalars: ScalarContext) -> QuantumTorus {
        let one = scalars.int(1);
        let q = scalars.q().clone();
        let qinv = scalars.q_pow(-1);
        let swap = MonomialAuto {
            images: [
                (one.clone(), [0, 1, 0]),
                (one.clone(), [1, 0, 0]),
                (one.clone(), [0, 0, 1]),
            ],
        };
        let tau2 = MonomialAuto {
            images: [
                (one.clone(), [0, 1, 0]),
                (qinv, [1, 0, 0]),
                (one.clone(), [0, 0, 1]),
            ],
        };
        let tau2_inv = MonomialAuto {
            images: [
                (q, [0, 1, 0]),
                (one.clone(), [1, 0, 0]),
                (one, [0, 0, 1]),
            ],
        };
        QuantumTorus {
            alpha: scalars.alpha(),
            scalars,
            autos: [swap.clone(), tau2],
            inverse_autos: [swap, tau2_inv],
        }
    }

    pub fn generic() -> QuantumTorus {
        QuantumTorus::new(ScalarContext::generic())
    }

    pub fn scalars(&self) -> &ScalarContext {
        &self.scalars
    }

    pub fn flavor(&self) -> Flavor {
        self.scalars.flavor()
    }

    /// `z_i` for `i ∈ {1, 2, 3}`.
    pub fn z(&self, i: usize) -> TorusElement {
        let mut e = [0; 3];
        e[i - 1] = 1;
        self.mono(e)
    }

    pub fn mono(&self, e: Exponent) -> TorusElement {
        TorusElement::monomial(self.scalars.int(1), e)
    }

    pub fn scalar(&self, c: ParamScalar) -> TorusElement {
        TorusElement::monomial(c, [0, 0, 0])
    }

    fn mono_mul(&self, (c1, e1): &Mono, (c2, e2): &Mono) -> Mono {
        // z3^c · z1^a' z2^b' = q^{c(a'+b')} z1^a' z2^b' z3^c
        let twist = self.scalars.q_pow(e1[2] * (e2[0] + e2[1]));
        (
            &(c1 * c2) * &twist,
            [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]],
        )
    }

    fn mono_inv(&self, (c, e): &Mono) -> Mono {
        let ci = c.inv().expect("monomial coefficients are units");
        (
            &ci * &self.scalars.q_pow(e[2] * (e[0] + e[1])),
            [-e[0], -e[1], -e[2]],
        )
    }

    fn mono_pow(&self, m: &Mono, n: i64) -> Mono {
        let base = if n < 0 { self.mono_inv(m) } else { m.clone() };
        let mut acc = (self.scalars.int(1), [0, 0, 0]);
        for _ in 0..n.unsigned_abs() {
            acc = self.mono_mul(&acc, &base);
        }
        acc
    }

    fn apply_auto(&self, auto: &MonomialAuto, u: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (e, c) in &u.terms {
            let mut m = (c.clone(), [0, 0, 0]);
            for (i, img) in auto.images.iter().enumerate() {
                m = self.mono_mul(&m, &self.mono_pow(img, e[i]));
            }
            out.accumulate(m.1, m.0);
        }
        out
    }

    /// Exact quotient of a `z3`-free slice by `z1 - z2`, or `None` if it does not divide.
    fn divide_by_difference(
        slice: &BTreeMap<(i64, i64), ParamScalar>,
    ) -> Option<BTreeMap<(i64, i64), ParamScalar>> {
        let shift = slice.keys().map(|k| k.0).min()?;
        let mut rem: BTreeMap<(i64, i64), ParamScalar> =
            slice.iter().map(|(&(a, b), c)| ((a - shift, b), c.clone())).collect();
        let mut quot = BTreeMap::new();
        // Long division in z1 over the Laurent ring in z2.
        while let Some((&(a, b), c)) = rem.iter().next_back() {
            if a == 0 {
                break;
            }
            let c = c.clone();
            rem.remove(&(a, b));
            quot.insert((a - 1 + shift, b), c.clone());
            let k = (a - 1, b + 1);
            let v = match rem.remove(&k) {
                Some(x) => &x + &c,
                None => c,
            };
            if !v.is_zero() {
                rem.insert(k, v);
            }
        }
        rem.is_empty().then_some(quot)
    }

    fn delta1(&self, u: &TorusElement) -> Result<TorusElement> {
        let w = self.add(u, &self.neg(&self.tau(Twist::One, u)));
        let mut slices: BTreeMap<i64, BTreeMap<(i64, i64), ParamScalar>> = BTreeMap::new();
        for (e, c) in &w.terms {
            slices.entry(e[2]).or_default().insert((e[0], e[1]), c.clone());
        }
        let minus_alpha = -&self.alpha;
        let mut out = TorusElement::zero();
        for (c3, slice) in slices {
            let quot = Self::divide_by_difference(&slice).ok_or_else(|| {
                Error::Internal("u - tau1(u) is not divisible by z1 - z2".into())
            })?;
            for ((a, b), c) in quot {
                let k = &minus_alpha * &c;
                out.accumulate([a + 1, b, c3], k.clone());
                out.accumulate([a, b + 1, c3], k);
            }
        }
        Ok(out)
    }

    /// Evaluates at a point by replacing the parameters with values (same flavor as the point).
    pub fn specialize(&self, u: &TorusElement, target: &QuantumTorus) -> Result<TorusElement> {
        let mut assignment = BTreeMap::new();
        assignment.insert("q".to_string(), target.scalars.q().clone());
        assignment.insert("h".to_string(), target.scalars.h().clone());
        let mut out = TorusElement::zero();
        for (e, c) in &u.terms {
            let v = if c.flavor() == Flavor::Laurent {
                c.specialize(&assignment)?
            } else {
                c.clone()
            };
            out.accumulate(*e, v);
        }
        Ok(out)
    }

    pub fn monomial_text(e: &Exponent) -> String {
        e.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                if x == 1 {
                    format!("z{}", i + 1)
                } else {
                    format!("z{}^{x}", i + 1)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl BaseRing for QuantumTorus {
    type Elem = TorusElement;

    fn descriptor(&self) -> String {
        "torus3".into()
    }

    fn zero(&self) -> TorusElement {
        TorusElement::zero()
    }

    fn one(&self) -> TorusElement {
        self.mono([0, 0, 0])
    }

    fn is_zero(&self, a: &TorusElement) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        a.add(b)
    }

    fn neg(&self, a: &TorusElement) -> TorusElement {
        a.neg()
    }

    fn mul(&self, a: &TorusElement, b: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let (c, e) = self.mono_mul(&(c1.clone(), *e1), &(c2.clone(), *e2));
                out.accumulate(e, c);
            }
        }
        out
    }

    fn from_scalar(&self, c: &ParamScalar) -> Result<TorusElement> {
        if c.flavor() != self.flavor() {
            return Err(Error::FlavorMismatch {
                left: self.flavor().to_string(),
                right: c.flavor().to_string(),
            });
        }
        Ok(self.scalar(c.clone()))
    }

    fn int(&self, n: i64) -> TorusElement {
        self.scalar(self.scalars.int(n))
    }

    fn rational(&self, r: &BigRational) -> Result<TorusElement> {
        Ok(self.scalar(ParamScalar::from_rational(self.flavor(), r)?))
    }

    fn tau(&self, t: Twist, a: &TorusElement) -> TorusElement {
        let i = if t == Twist::One { 0 } else { 1 };
        self.apply_auto(&self.autos[i], a)
    }

    fn tau_inv(&self, t: Twist, a: &TorusElement) -> TorusElement {
        let i = if t == Twist::One { 0 } else { 1 };
        self.apply_auto(&self.inverse_autos[i], a)
    }

    fn delta(&self, t: Twist, a: &TorusElement) -> TorusElement {
        match t {
            Twist::One => self.delta1(a).expect("u - tau1(u) is always divisible"),
            Twist::Two => TorusElement::zero(),
        }
    }

    fn inverse(&self, a: &TorusElement) -> Option<TorusElement> {
        if a.len() != 1 {
            return None;
        }
        let (e, c) = a.terms.iter().next()?;
        c.inv().ok()?;
        let (ci, ei) = self.mono_inv(&(c.clone(), *e));
        Some(TorusElement::monomial(ci, ei))
    }

    fn is_division_ring(&self) -> bool {
        false
    }

    fn generators(&self) -> Vec<TorusElement> {
        let mut g = Vec::new();
        for i in 0..3 {
            let mut e = [0; 3];
            e[i] = 1;
            g.push(self.mono(e));
            e[i] = -1;
            g.push(self.mono(e));
        }
        if self.flavor() == Flavor::Laurent {
            g.push(self.scalar(self.scalars.q().clone()));
            g.push(self.scalar(self.scalars.h().clone()));
        }
        g
    }

    fn contains(&self, a: &TorusElement) -> bool {
        a.terms.values().all(|c| c.flavor() == self.flavor())
    }

    fn format(&self, a: &TorusElement) -> String {
        join_terms(
            a.terms
                .iter()
                .map(|(e, c)| coefficient_term(&c.to_text(), &Self::monomial_text(e))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> QuantumTorus {
        QuantumTorus::generic()
    }

    #[test]
    fn commutation_rules() {
        let r = torus();
        let (z1, z3) = (r.z(1), r.z(3));
        let q = r.scalar(r.scalars().q().clone());
        assert_eq!(r.mul(&z3, &z1), r.mul(&q, &r.mul(&z1, &z3)));
        assert_eq!(r.format(&r.mul(&z3, &z1)), "q*z1*z3");
        assert_eq!(r.mul(&r.z(1), &r.z(2)), r.mul(&r.z(2), &r.z(1)));
    }

    #[test]
    fn tau_actions() {
        let r = torus();
        assert_eq!(r.tau(Twist::One, &r.z(1)), r.z(2));
        assert_eq!(r.format(&r.tau(Twist::Two, &r.z(2))), "q^-1*z1");
        for g in r.generators() {
            for t in [Twist::One, Twist::Two] {
                assert_eq!(r.tau_inv(t, &r.tau(t, &g)), g);
                assert_eq!(r.tau(t, &r.tau_inv(t, &g)), g);
            }
        }
    }

    #[test]
    fn tau_is_multiplicative() {
        let r = torus();
        let gens = r.generators();
        for a in &gens {
            for b in &gens {
                for t in [Twist::One, Twist::Two] {
                    assert_eq!(r.tau(t, &r.mul(a, b)), r.mul(&r.tau(t, a), &r.tau(t, b)));
                }
            }
        }
    }

    #[test]
    fn delta1_values() {
        let r = torus();
        let a = r.scalar(r.scalars().alpha());
        // δ1(z1) = -α (z1 + z2)
        let expected = r.neg(&r.mul(&a, &r.add(&r.z(1), &r.z(2))));
        assert_eq!(r.delta(Twist::One, &r.z(1)), expected);
        assert!(r.delta(Twist::One, &r.z(3)).is_zero());
        assert!(r.delta(Twist::One, &r.mul(&r.z(1), &r.z(2))).is_zero());
    }

    #[test]
    fn delta1_twisted_leibniz() {
        let r = torus();
        let gens = r.generators();
        for a in &gens {
            for b in &gens {
                let lhs = r.delta(Twist::One, &r.mul(a, b));
                let rhs = r.add(
                    &r.mul(&r.tau(Twist::One, a), &r.delta(Twist::One, b)),
                    &r.mul(&r.delta(Twist::One, a), b),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn monomial_inverse() {
        let r = torus();
        let m = r.mul(&r.z(3), &r.z(1));
        let mi = r.inverse(&m).unwrap();
        assert_eq!(r.mul(&m, &mi), r.one());
        assert_eq!(r.mul(&mi, &m), r.one());
        assert!(r.inverse(&r.add(&r.z(1), &r.z(2))).is_none());
    }
}
