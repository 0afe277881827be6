//! Bounded-degree membership by brute-force linear algebra.

use crate::amalgam::{AltWord, AmalgamElement, AmalgamInstance};
use crate::error::{Error, Result};
use crate::ring::BaseRing;
use crate::scalar::ParamScalar;
use crate::word::Letter;

use super::linalg::{in_span, ratfunc_size};
use super::{GeneratorSet, Side, View};

fn words_up_to(bound: usize) -> Vec<AltWord> {
    let mut out = vec![AltWord::unit()];
    for len in 1..=bound {
        out.push(AltWord::starting(len, Letter::X));
        out.push(AltWord::starting(len, Letter::Y));
    }
    out
}

/// Whether `f` is a combination of `gens` with cofactors of degree at most `bound`.
///
/// Left ideals use columns `W·g`, right ideals `g·W`, and two-sided ideals
/// `W·g·r·W′` with `|W| + |W′| ≤ bound` and `r` running over the base ring's
/// generators; coefficients from the base field multiply each column on the
/// side matching the ideal.
pub fn is_member<R: BaseRing<Elem = ParamScalar>>(
    inst: &AmalgamInstance<R>,
    f: &AmalgamElement<R::Elem>,
    gens: &GeneratorSet<R::Elem>,
    bound: i64,
) -> Result<bool> {
    if bound < 0 {
        return Err(Error::InvalidArgument(format!("degree bound {bound} is negative")));
    }
    let bound = bound as usize;
    let view = View::new(inst, gens.side())?;
    if f.is_zero() {
        return Ok(true);
    }
    let words = words_up_to(bound);
    let mut cols: Vec<AmalgamElement<R::Elem>> = Vec::new();
    for g in gens.elements() {
        match gens.side() {
            Side::Left => cols.extend(words.iter().map(|w| inst.mul(&inst.basis(*w), g))),
            Side::Right => cols.extend(words.iter().map(|w| inst.mul(g, &inst.basis(*w)))),
            Side::TwoSided => {
                let scalars: Vec<_> = inst
                    .ring()
                    .generators()
                    .into_iter()
                    .map(|r| inst.constant(r))
                    .collect();
                for w in &words {
                    let wg = inst.mul(&inst.basis(*w), g);
                    for r in &scalars {
                        let wgr = inst.mul(&wg, r);
                        for v in words.iter().filter(|v| v.len + w.len <= bound) {
                            cols.push(inst.mul(&wgr, &inst.basis(*v)));
                        }
                    }
                }
            }
        }
    }
    let cap = cols
        .iter()
        .chain(std::iter::once(f))
        .filter_map(AmalgamElement::degree)
        .max()
        .unwrap_or(0);
    let matrix: Vec<Vec<R::Elem>> = cols
        .iter()
        .map(|c| view.coords(c, cap).expect("within cap"))
        .collect();
    let target = view.coords(f, cap).expect("within cap");
    Ok(in_span(inst.ring(), &matrix, &target, ratfunc_size))
}
