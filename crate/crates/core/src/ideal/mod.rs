//! Left, right and two-sided ideals of an amalgam over a commutative base field.
//!
//! Each side has its own notion of leading data. Left ideals read left
//! coefficients against the hatted basis (words labelled by their last letter)
//! and grow by left word multiples `c·W·g`. Right ideals mirror this with right
//! coefficients, words labelled by their first letter, and multiples `g·W·c`.
//! Two-sided ideals use left coefficients, first-letter labels and `c·g·W`.

mod combo;
mod linalg;
mod oracle;
mod span;

use std::fmt;
use std::str::FromStr;

pub use combo::{Combination, CofactorTerm};
pub use linalg::{in_span, ratfunc_size, solve};
pub use oracle::is_member;

use crate::amalgam::{AltWord, AmalgamElement, AmalgamInstance, FactorKind};
use crate::error::{Error, Result};
use crate::ring::BaseRing;
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s {
            "L" | "l" | "left" => Ok(Side::Left),
            "R" | "r" | "right" => Ok(Side::Right),
            "2" | "two-sided" | "both" => Ok(Side::TwoSided),
            other => Err(Error::InvalidArgument(format!("unknown side `{other}`"))),
        }
    }
}

/// Generators of a one- or two-sided ideal; all elements are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet<E> {
    side: Side,
    elements: Vec<AmalgamElement<E>>,
}

impl<E: Clone> GeneratorSet<E> {
    pub fn new(side: Side, elements: Vec<AmalgamElement<E>>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("empty generator set".into()));
        }
        if elements.iter().any(AmalgamElement::is_zero) {
            return Err(Error::InvalidArgument("generators must be nonzero".into()));
        }
        Ok(GeneratorSet { side, elements })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn elements(&self) -> &[AmalgamElement<E>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `f = Σ left·g_index·right + remainder`.
#[derive(Clone, Debug)]
pub struct Reduction<E> {
    pub remainder: AmalgamElement<E>,
    pub cofactors: Combination<E>,
}

/// Which branch of the selection produced the output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionCase {
    /// The ideal contains a unit.
    Unit,
    /// A minimal-degree generator with both leading coordinates nonzero.
    BothLeading,
    /// Every element shares the leading shape of the minimal one.
    SingleShape,
    /// A second generator supplies the missing leading coordinate.
    SecondShape,
    /// Two independent leading pairs already at the minimal degree.
    TwoAtMinimal,
}

/// Output generators with cofactor expressions in both directions.
#[derive(Clone, Debug)]
pub struct ReductionCertificate<E> {
    pub side: Side,
    pub inputs: Vec<AmalgamElement<E>>,
    pub outputs: Vec<AmalgamElement<E>>,
    /// `outputs[i] = Σ` terms over `inputs`.
    pub outputs_from_inputs: Vec<Combination<E>>,
    /// `inputs[j] = Σ` terms over `outputs`.
    pub inputs_from_outputs: Vec<Combination<E>>,
    pub case: SelectionCase,
    pub degree_cap: usize,
    pub verified: bool,
}

impl<E: Clone + PartialEq> ReductionCertificate<E> {
    /// Multiplies out every cofactor expression and compares.
    pub fn verify<R: BaseRing<Elem = E>>(&self, inst: &AmalgamInstance<R>) -> bool {
        let ok = |combos: &[Combination<E>], basis: &[AmalgamElement<E>], claimed: &[AmalgamElement<E>]| {
            combos.len() == claimed.len()
                && combos
                    .iter()
                    .zip(claimed)
                    .all(|(c, t)| c.evaluate(inst, basis) == *t)
        };
        ok(&self.outputs_from_inputs, &self.inputs, &self.outputs)
            && ok(&self.inputs_from_outputs, &self.outputs, &self.inputs)
    }
}

/// Per-side access to coordinates, multiples and scaling.
pub(crate) struct View<'a, R: BaseRing> {
    pub inst: &'a AmalgamInstance<R>,
    pub side: Side,
}

impl<'a, R: BaseRing> View<'a, R> {
    pub fn new(inst: &'a AmalgamInstance<R>, side: Side) -> Result<Self> {
        if !inst.ring().is_division_ring() {
            return Err(Error::NotDivisionRing(inst.ring().descriptor()));
        }
        Ok(View { inst, side })
    }

    fn ring(&self) -> &R {
        self.inst.ring()
    }

    /// The basis word occupying slot `l` at degree `d`.
    pub fn slot_word(&self, d: usize, l: Letter) -> AltWord {
        match self.side {
            Side::Left => AltWord::ending(d, l),
            Side::Right | Side::TwoSided => AltWord::starting(d, l),
        }
    }

    /// Position of `(d, l)` in a coordinate vector: `0` for the constant, then `2d-1`, `2d`.
    pub fn position(d: usize, l: Letter) -> usize {
        match (d, l) {
            (0, _) => 0,
            (d, Letter::X) => 2 * d - 1,
            (d, Letter::Y) => 2 * d,
        }
    }

    pub fn position_slot(p: usize) -> (usize, Letter) {
        if p == 0 {
            (0, Letter::X)
        } else if p % 2 == 1 {
            (p.div_ceil(2), Letter::X)
        } else {
            (p / 2, Letter::Y)
        }
    }

    /// Coefficients in this side's coordinates, keyed by basis word.
    fn coefficients(&self, f: &AmalgamElement<R::Elem>) -> Vec<(AltWord, R::Elem)> {
        match self.side {
            Side::Left | Side::TwoSided => f.terms().map(|(w, c)| (*w, c.clone())).collect(),
            Side::Right => self
                .inst
                .to_right_form(f)
                .terms()
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    /// Coordinate vector covering degrees `0..=cap`; `None` if `f` is above the cap.
    pub fn coords(&self, f: &AmalgamElement<R::Elem>, cap: usize) -> Option<Vec<R::Elem>> {
        if f.degree().is_some_and(|d| d > cap) {
            return None;
        }
        let mut v = vec![self.ring().zero(); 2 * cap + 1];
        for (w, c) in self.coefficients(f) {
            let l = if self.slot_word(w.len, Letter::X) == w { Letter::X } else { Letter::Y };
            v[Self::position(w.len, l)] = c;
        }
        Some(v)
    }

    pub fn from_coords(&self, v: &[R::Elem]) -> AmalgamElement<R::Elem> {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring().is_zero(c))
            .map(|(p, c)| {
                let (d, l) = Self::position_slot(p);
                (self.slot_word(d, l), c.clone())
            });
        match self.side {
            Side::Left | Side::TwoSided => self.inst.from_terms(terms),
            Side::Right => self.inst.to_left_form(&self.inst.right_from_terms(terms)),
        }
    }

    /// The leading pair at degree `m` (the second slot is absent at degree 0).
    pub fn pair(&self, f: &AmalgamElement<R::Elem>, m: usize) -> (R::Elem, R::Elem) {
        let coeffs = self.coefficients(f);
        let get = |l: Letter| {
            let w = self.slot_word(m, l);
            coeffs
                .iter()
                .find(|(v, _)| *v == w)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| self.ring().zero())
        };
        let a = get(Letter::X);
        let b = if m == 0 { self.ring().zero() } else { get(Letter::Y) };
        (a, b)
    }

    /// Scales coordinates by `c`: on the left for left and two-sided views, on the right otherwise.
    pub fn scale(&self, c: &R::Elem, f: &AmalgamElement<R::Elem>) -> AmalgamElement<R::Elem> {
        match self.side {
            Side::Left | Side::TwoSided => self.inst.scale_left(c, f),
            Side::Right => self.inst.mul(f, &self.inst.constant(c.clone())),
        }
    }

    /// The word multiple of `g` (degree `n`) whose leading term sits in slot `l` at degree `m > n`.
    fn raise(
        &self,
        g: &AmalgamElement<R::Elem>,
        index: usize,
        n: usize,
        m: usize,
        l: Letter,
    ) -> Result<(AmalgamElement<R::Elem>, CofactorTerm<R::Elem>)> {
        let kind = match (self.side, l) {
            (Side::Left, Letter::X) => FactorKind::XHat,
            (Side::Left, Letter::Y) => FactorKind::YHat,
            (_, Letter::X) => FactorKind::X,
            (_, Letter::Y) => FactorKind::Y,
        };
        let w = self.inst.word_factor(kind, n, m)?;
        let one = self.inst.one();
        Ok(match self.side {
            Side::Left => (self.inst.mul(&w, g), CofactorTerm::new(w, index, one)),
            Side::Right | Side::TwoSided => (self.inst.mul(g, &w), CofactorTerm::new(one, index, w)),
        })
    }
}

/// Division with remainder: cancels leading pairs of `f` with word multiples
/// of `gens` for as long as the leading pair is reachable at its degree.
pub fn reduce_mod<R: BaseRing>(
    inst: &AmalgamInstance<R>,
    f: &AmalgamElement<R::Elem>,
    gens: &GeneratorSet<R::Elem>,
) -> Result<Reduction<R::Elem>> {
    let view = View::new(inst, gens.side())?;
    reduce_in_view(&view, f, gens.elements())
}

pub(crate) fn reduce_in_view<R: BaseRing>(
    view: &View<'_, R>,
    f: &AmalgamElement<R::Elem>,
    gens: &[AmalgamElement<R::Elem>],
) -> Result<Reduction<R::Elem>> {
    let inst = view.inst;
    let ring = inst.ring();
    let leading: Vec<(usize, (R::Elem, R::Elem))> = gens
        .iter()
        .map(|g| {
            let n = g.degree().expect("generators are nonzero");
            (n, view.pair(g, n))
        })
        .collect();
    let mut rem = f.clone();
    let mut cofactors = Combination::zero(view.side);
    while let Some(m) = rem.degree() {
        let (sa, sb) = view.pair(&rem, m);
        let mut cands: Vec<(AmalgamElement<R::Elem>, CofactorTerm<R::Elem>)> = Vec::new();
        for (i, (g, (n, (u, v)))) in gens.iter().zip(&leading).enumerate() {
            if *n > m {
                continue;
            }
            if *n == m {
                cands.push((g.clone(), CofactorTerm::new(inst.one(), i, inst.one())));
                continue;
            }
            // A constant generator reaches both slots.
            let v = if *n == 0 { u } else { v };
            for (l, c) in [(Letter::X, u), (Letter::Y, v)] {
                if ring.is_zero(c) {
                    continue;
                }
                cands.push(view.raise(g, i, *n, m, l)?);
            }
        }
        let cols: Vec<Vec<R::Elem>> = cands
            .iter()
            .map(|(e, _)| {
                let (a, b) = view.pair(e, m);
                if m == 0 { vec![a] } else { vec![a, b] }
            })
            .collect();
        let target = if m == 0 { vec![sa] } else { vec![sa, sb] };
        let Some(sol) = solve(ring, &cols, &target) else {
            break;
        };
        for (c, (mult, term)) in sol.iter().zip(cands) {
            if ring.is_zero(c) {
                continue;
            }
            rem = inst.sub(&rem, &view.scale(c, &mult));
            cofactors.push(term.scaled(inst, view.side, c));
        }
        if rem.degree().is_some_and(|d| d >= m) {
            return Err(Error::Internal(format!(
                "reduction did not lower the degree below {m}"
            )));
        }
    }
    cofactors.simplify(inst);
    Ok(Reduction {
        remainder: rem,
        cofactors,
    })
}

/// Degree cap used on the first saturation pass.
fn initial_cap<E: Clone>(gens: &[AmalgamElement<E>]) -> usize {
    gens.iter().filter_map(AmalgamElement::degree).max().unwrap_or(0) + 4
}

/// Replaces a one-sided generating set by at most two generators of the same ideal.
pub fn minimize_one_sided<R: BaseRing>(
    inst: &AmalgamInstance<R>,
    gens: &GeneratorSet<R::Elem>,
) -> Result<ReductionCertificate<R::Elem>> {
    if gens.side() == Side::TwoSided {
        return Err(Error::InvalidArgument(
            "minimize_one_sided needs a left or right generator set".into(),
        ));
    }
    minimize(inst, gens)
}

/// Replaces a two-sided generating set by one generator. Refuses when the
/// base ring cannot certify that neither derivation is inner.
pub fn minimize_two_sided<R: BaseRing>(
    inst: &AmalgamInstance<R>,
    gens: &GeneratorSet<R::Elem>,
) -> Result<ReductionCertificate<R::Elem>> {
    if gens.side() != Side::TwoSided {
        return Err(Error::InvalidArgument(
            "minimize_two_sided needs a two-sided generator set".into(),
        ));
    }
    match inst.ring().derivations_outer() {
        Some(true) => {}
        Some(false) => {
            return Err(Error::Hypothesis(format!(
                "a derivation of {} is inner; two-sided ideals need not be principal",
                inst.ring().descriptor()
            )))
        }
        None => {
            return Err(Error::Hypothesis(format!(
                "hypothesis unverified: cannot decide innerness of the derivations of {}",
                inst.ring().descriptor()
            )))
        }
    }
    let cert = minimize(inst, gens)?;
    if cert.outputs.len() != 1 {
        return Err(Error::Incomplete(format!(
            "two-sided reduction ended with {} generators",
            cert.outputs.len()
        )));
    }
    Ok(cert)
}

fn minimize<R: BaseRing>(
    inst: &AmalgamInstance<R>,
    gens: &GeneratorSet<R::Elem>,
) -> Result<ReductionCertificate<R::Elem>> {
    let view = View::new(inst, gens.side())?;
    let inputs = gens.elements();
    let first = initial_cap(inputs);
    for cap in [first, first + 4] {
        let sp = span::saturate(&view, inputs, cap);
        let (case, selected) = span::select(&view, &sp)?;
        let (outputs, outputs_from_inputs): (Vec<_>, Vec<_>) = selected.into_iter().unzip();
        let mut inputs_from_outputs = Vec::with_capacity(inputs.len());
        for f in inputs {
            let red = reduce_in_view(&view, f, &outputs)?;
            if !red.remainder.is_zero() {
                break;
            }
            inputs_from_outputs.push(red.cofactors);
        }
        if inputs_from_outputs.len() < inputs.len() {
            continue;
        }
        let mut cert = ReductionCertificate {
            side: gens.side(),
            inputs: inputs.to_vec(),
            outputs,
            outputs_from_inputs,
            inputs_from_outputs,
            case,
            degree_cap: cap,
            verified: false,
        };
        cert.verified = cert.verify(inst);
        if !cert.verified {
            return Err(Error::Internal("certificate failed to multiply out".into()));
        }
        return Ok(cert);
    }
    Err(Error::Incomplete(format!(
        "saturation up to degree {} did not certify the reduction",
        first + 4
    )))
}

#[cfg(test)]
mod tests;
