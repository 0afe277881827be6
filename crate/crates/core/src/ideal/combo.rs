use crate::amalgam::{AmalgamElement, AmalgamInstance};
use crate::ring::BaseRing;

use super::Side;

/// One summand `left · g_index · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorTerm<E> {
    pub left: AmalgamElement<E>,
    pub index: usize,
    pub right: AmalgamElement<E>,
}

impl<E: Clone + PartialEq> CofactorTerm<E> {
    pub fn new(left: AmalgamElement<E>, index: usize, right: AmalgamElement<E>) -> Self {
        CofactorTerm { left, index, right }
    }

    /// The term for `c·(term)` (left and two-sided) or `(term)·c` (right).
    pub(crate) fn scaled<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, side: Side, c: &E) -> Self {
        let mut t = self.clone();
        match side {
            Side::Left | Side::TwoSided => t.left = inst.scale_left(c, &t.left),
            Side::Right => t.right = inst.mul(&t.right, &inst.constant(c.clone())),
        }
        t
    }
}

/// A sum of [`CofactorTerm`]s expressing an element through a list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<E> {
    side: Side,
    terms: Vec<CofactorTerm<E>>,
}

impl<E: Clone + PartialEq> Combination<E> {
    pub fn zero(side: Side) -> Self {
        Combination {
            side,
            terms: Vec::new(),
        }
    }

    pub fn single<R: BaseRing<Elem = E>>(inst: &AmalgamInstance<R>, side: Side, index: usize) -> Self {
        Combination {
            side,
            terms: vec![CofactorTerm::new(inst.one(), index, inst.one())],
        }
    }

    pub fn terms(&self) -> &[CofactorTerm<E>] {
        &self.terms
    }

    pub fn push(&mut self, t: CofactorTerm<E>) {
        self.terms.push(t);
    }

    pub fn scaled<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, c: &E) -> Self {
        Combination {
            side: self.side,
            terms: self.terms.iter().map(|t| t.scaled(inst, self.side, c)).collect(),
        }
    }

    /// `self - c·other` in the side's scaling convention.
    pub fn sub_scaled<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, c: &E, other: &Self) -> Self {
        let neg = inst.ring().neg(c);
        let mut out = self.clone();
        out.terms.extend(other.scaled(inst, &neg).terms);
        out.simplify(inst);
        out
    }

    pub fn left_mul<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, a: &AmalgamElement<E>) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.left = inst.mul(a, &t.left);
        }
        out.simplify(inst);
        out
    }

    pub fn right_mul<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, a: &AmalgamElement<E>) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.right = inst.mul(&t.right, a);
        }
        out.simplify(inst);
        out
    }

    /// Merges terms sharing a generator and an outer factor, dropping zeros.
    pub fn simplify<R: BaseRing<Elem = E>>(&mut self, inst: &AmalgamInstance<R>) {
        let mut merged: Vec<CofactorTerm<E>> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            let slot = merged.iter_mut().find(|m| {
                m.index == t.index
                    && match self.side {
                        Side::Right => m.left == t.left,
                        Side::Left | Side::TwoSided => m.right == t.right,
                    }
            });
            match slot {
                Some(m) => match self.side {
                    Side::Right => m.right = inst.add(&m.right, &t.right),
                    Side::Left | Side::TwoSided => m.left = inst.add(&m.left, &t.left),
                },
                None => merged.push(t),
            }
        }
        merged.retain(|t| !t.left.is_zero() && !t.right.is_zero());
        merged.sort_by_key(|t| t.index);
        self.terms = merged;
    }

    pub fn evaluate<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, basis: &[AmalgamElement<E>]) -> AmalgamElement<E> {
        self.terms.iter().fold(inst.zero(), |acc, t| {
            let v = inst.mul(&inst.mul(&t.left, &basis[t.index]), &t.right);
            inst.add(&acc, &v)
        })
    }

    /// Rewrites a combination over `outer` generators, each given as a combination over inner ones.
    pub fn compose<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>, inner: &[Combination<E>]) -> Self {
        let mut out = Combination::zero(self.side);
        for t in &self.terms {
            for s in &inner[t.index].terms {
                out.terms.push(CofactorTerm::new(
                    inst.mul(&t.left, &s.left),
                    s.index,
                    inst.mul(&s.right, &t.right),
                ));
            }
        }
        out.simplify(inst);
        out
    }
}
