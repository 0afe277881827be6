//! Seeded random elements for property checks; the same seed always yields the same stream.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amalgam::{AltWord, AmalgamElement, AmalgamInstance};
use crate::ring::{BaseRing, QuantumTorus, TorusElement};
use crate::scalar::{BaseField, Flavor, Laurent, ParamScalar, RatFunc};
use crate::word::{Letter, Word, WordAlgebra, WordElement};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// A small polynomial in `s` of degree at most `deg`.
    fn s_poly(&mut self, field: BaseField, deg: u32) -> ParamScalar {
        let flavor = Flavor::RatFunc(field);
        let s = ParamScalar::RatFunc(RatFunc::s(field));
        let mut acc = ParamScalar::zero(flavor);
        let mut pow = ParamScalar::one(flavor);
        for _ in 0..=deg {
            let c = ParamScalar::from_i64(flavor, self.int(-3, 3));
            acc = &acc + &(&c * &pow);
            pow = &pow * &s;
        }
        acc
    }

    /// A random scalar of `flavor`, possibly zero.
    pub fn scalar(&mut self, flavor: Flavor) -> ParamScalar {
        match flavor {
            Flavor::Rational => {
                let n = self.int(-5, 5);
                let d = self.int(1, 4);
                ParamScalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            Flavor::Prime(p) => ParamScalar::from_i64(flavor, self.int(0, p as i64 - 1)),
            Flavor::Laurent => {
                let mut acc = Laurent::zero();
                for _ in 0..self.int(1, 2) {
                    let c = BigRational::from_integer(BigInt::from(self.int(-3, 3)));
                    acc = acc.add(&Laurent::monomial(c, self.int(-1, 1), self.int(-2, 2)));
                }
                ParamScalar::Laurent(acc)
            }
            Flavor::RatFunc(field) => {
                let num = self.s_poly(field, 2);
                if self.coin() {
                    return num;
                }
                let den = self.s_poly(field, 1);
                num.checked_div(&den).unwrap_or(num)
            }
        }
    }

    pub fn nonzero_scalar(&mut self, flavor: Flavor) -> ParamScalar {
        loop {
            let c = self.scalar(flavor);
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// A random nonzero `(q, h)` over `ℚ` or `𝔽_p`.
    pub fn parameters(&mut self, flavor: Flavor) -> (ParamScalar, ParamScalar) {
        (self.nonzero_scalar(flavor), self.nonzero_scalar(flavor))
    }

    pub fn torus_element(&mut self, r: &QuantumTorus, terms: usize) -> TorusElement {
        let mut acc = r.zero();
        for _ in 0..terms {
            let e = [self.int(-2, 2), self.int(-2, 2), self.int(-2, 2)];
            let c = self.nonzero_scalar(r.flavor());
            acc = r.add(&acc, &r.mul(&r.scalar(c), &r.mono(e)));
        }
        acc
    }

    pub fn letter(&mut self) -> Letter {
        *[Letter::X, Letter::Y].choose(&mut self.rng).expect("nonempty")
    }

    pub fn alt_word(&mut self, max_len: usize) -> AltWord {
        let len = self.rng.gen_range(0..=max_len);
        AltWord::starting(len, self.letter())
    }

    /// A word in `x, y` that need not alternate.
    pub fn word(&mut self, max_len: usize) -> Word {
        let len = self.rng.gen_range(0..=max_len);
        Word::new((0..len).map(|_| self.letter()).collect())
    }

    /// An amalgam element of degree at most `max_deg` with up to `terms` terms.
    pub fn amalgam_element<R: BaseRing>(
        &mut self,
        inst: &AmalgamInstance<R>,
        max_deg: usize,
        terms: usize,
        mut coeff: impl FnMut(&mut Sampler) -> R::Elem,
    ) -> AmalgamElement<R::Elem> {
        let mut acc = inst.zero();
        for _ in 0..terms {
            let w = self.alt_word(max_deg);
            let c = coeff(self);
            acc = inst.add(&acc, &inst.term(c, w));
        }
        acc
    }

    /// A nonzero amalgam element whose degree is exactly `deg`.
    pub fn amalgam_of_degree<R: BaseRing>(
        &mut self,
        inst: &AmalgamInstance<R>,
        deg: usize,
        terms: usize,
        mut coeff: impl FnMut(&mut Sampler) -> R::Elem,
    ) -> AmalgamElement<R::Elem> {
        loop {
            let top = AltWord::starting(deg, self.letter());
            let lead = inst.term(coeff(self), top);
            let rest = self.amalgam_element(inst, deg, terms.saturating_sub(1), &mut coeff);
            let f = inst.add(&lead, &rest);
            if f.degree() == Some(deg) {
                return f;
            }
        }
    }

    pub fn word_element<R: BaseRing>(
        &mut self,
        alg: &WordAlgebra<'_, R>,
        max_len: usize,
        terms: usize,
        mut coeff: impl FnMut(&mut Sampler) -> R::Elem,
    ) -> WordElement<R::Elem> {
        let mut acc = alg.zero();
        for _ in 0..terms {
            let w = self.word(max_len);
            let c = coeff(self);
            acc = alg.add(&acc, &alg.term(c, w));
        }
        acc
    }
}
