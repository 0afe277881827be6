//! Saturation of a generating set inside the degree-bounded part of the ideal,
//! kept as a reduced echelon basis, and the selection of output generators.

use std::collections::VecDeque;

use crate::amalgam::AmalgamElement;
use crate::error::{Error, Result};
use crate::ring::BaseRing;
use crate::word::Letter;

use super::{reduce_in_view, Combination, SelectionCase, Side, View};

pub(crate) struct Row<E> {
    pub coords: Vec<E>,
    pub pivot: usize,
    pub combo: Combination<E>,
}

/// Reduced echelon basis of a subspace of the degree-`cap` part; pivots are the
/// highest nonzero positions and every pivot column is zero in the other rows.
pub(crate) struct Span<E> {
    pub cap: usize,
    pub rows: Vec<Row<E>>,
}

impl<E: Clone + PartialEq> Span<E> {
    /// Adds `v` to the span; returns the index of the new row, or `None` if `v` was dependent.
    fn insert<R: BaseRing<Elem = E>>(&mut self, view: &View<'_, R>, mut v: Vec<E>, mut combo: Combination<E>) -> Option<usize> {
        let inst = view.inst;
        let ring = inst.ring();
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if ring.is_zero(&c) {
                continue;
            }
            axpy(ring, &mut v, &c, &row.coords);
            combo = combo.sub_scaled(inst, &c, &row.combo);
        }
        let p = (0..v.len()).rev().find(|&i| !ring.is_zero(&v[i]))?;
        let inv = ring.inverse(&v[p]).expect("field");
        for x in v.iter_mut() {
            *x = ring.mul(&inv, x);
        }
        combo = combo.scaled(inst, &inv);
        if p == 0 {
            // A unit ends saturation, so the other rows are never read again.
            self.rows.insert(0, Row { coords: v, pivot: 0, combo });
            return Some(0);
        }
        for row in &mut self.rows {
            let c = row.coords[p].clone();
            if ring.is_zero(&c) {
                continue;
            }
            axpy(ring, &mut row.coords, &c, &v);
            row.combo = row.combo.sub_scaled(inst, &c, &combo);
        }
        let at = self.rows.partition_point(|r| r.pivot < p);
        self.rows.insert(
            at,
            Row {
                coords: v,
                pivot: p,
                combo,
            },
        );
        Some(at)
    }

    fn row_at(&self, p: usize) -> Option<&Row<E>> {
        self.rows.iter().find(|r| r.pivot == p)
    }
}

/// `v -= c·w`.
fn axpy<R: BaseRing>(ring: &R, v: &mut [R::Elem], c: &R::Elem, w: &[R::Elem]) {
    for (a, b) in v.iter_mut().zip(w) {
        if !ring.is_zero(b) {
            *a = ring.sub(a, &ring.mul(c, b));
        }
    }
}

/// Closes the span of `inputs` under the side's multiplications, discarding
/// anything above degree `cap`.
pub(crate) fn saturate<R: BaseRing>(view: &View<'_, R>, inputs: &[AmalgamElement<R::Elem>], cap: usize) -> Span<R::Elem> {
    let inst = view.inst;
    // (multiply on the left?, factor)
    let mut ops: Vec<(bool, AmalgamElement<R::Elem>)> = Vec::new();
    let letters = [inst.x(), inst.y()];
    if matches!(view.side, Side::Left | Side::TwoSided) {
        ops.extend(letters.iter().map(|l| (true, l.clone())));
    }
    if matches!(view.side, Side::Right | Side::TwoSided) {
        ops.extend(letters.iter().map(|l| (false, l.clone())));
    }
    if view.side == Side::TwoSided {
        // Right multiplication by the base field; the left span already covers
        // left scalars, and these commutators carry the twist-commutator terms.
        let ring = inst.ring();
        ops.extend(
            ring.generators()
                .into_iter()
                .filter(|r| !ring.is_one(r))
                .map(|r| (false, inst.constant(r))),
        );
    }

    let mut sp = Span { cap, rows: Vec::new() };
    // Candidates bucketed by degree; lower degrees are expanded first so that
    // small elements (and units) surface early.
    let mut queue: Vec<VecDeque<Candidate<R::Elem>>> = (0..=cap).map(|_| VecDeque::new()).collect();
    let push = |queue: &mut Vec<VecDeque<_>>, e: AmalgamElement<R::Elem>, c: Combination<R::Elem>| {
        if let Some(d) = e.degree().filter(|&d| d <= cap) {
            queue[d].push_back((e, c));
        }
    };
    for (i, g) in inputs.iter().enumerate() {
        push(&mut queue, g.clone(), Combination::single(inst, view.side, i));
    }
    while let Some((e, combo)) = queue.iter_mut().find_map(VecDeque::pop_front) {
        let v = view.coords(&e, cap).expect("queued within cap");
        let Some(k) = sp.insert(view, v, combo) else {
            continue;
        };
        if sp.rows[k].pivot == 0 {
            // A unit: the ideal is everything.
            break;
        }
        let row = &sp.rows[k];
        let e = view.from_coords(&row.coords);
        for (left, a) in &ops {
            if *left {
                push(&mut queue, inst.mul(a, &e), row.combo.left_mul(inst, a));
            } else {
                push(&mut queue, inst.mul(&e, a), row.combo.right_mul(inst, a));
            }
        }
    }
    sp
}

type Candidate<E> = (AmalgamElement<E>, Combination<E>);
type Selected<E> = Vec<Candidate<E>>;

/// Picks at most two generators from a saturated span.
pub(crate) fn select<R: BaseRing>(view: &View<'_, R>, sp: &Span<R::Elem>) -> Result<(SelectionCase, Selected<R::Elem>)> {
    let inst = view.inst;
    let ring = inst.ring();
    let degree = |r: &Row<R::Elem>| View::<R>::position_slot(r.pivot).0;
    let Some(n) = sp.rows.iter().map(degree).min() else {
        return Err(Error::Internal("saturation produced an empty span".into()));
    };
    let out = |r: &Row<R::Elem>| (view.from_coords(&r.coords), r.combo.clone());
    if n == 0 {
        let r = sp.row_at(0).expect("degree-0 row");
        return Ok((SelectionCase::Unit, vec![out(r)]));
    }
    let px = View::<R>::position(n, Letter::X);
    let py = View::<R>::position(n, Letter::Y);
    let (p, missing) = match (sp.row_at(px), sp.row_at(py)) {
        (Some(rx), Some(ry)) => {
            // p = rx + ry has both leading coordinates; p′ = ry has none on x.
            let coords: Vec<_> = rx.coords.iter().zip(&ry.coords).map(|(a, b)| ring.add(a, b)).collect();
            let combo = rx.combo.sub_scaled(inst, &ring.neg(&ring.one()), &ry.combo);
            return Ok((
                SelectionCase::TwoAtMinimal,
                vec![(view.from_coords(&coords), combo), out(ry)],
            ));
        }
        (None, Some(ry)) if !ring.is_zero(&ry.coords[px]) => {
            return Ok((SelectionCase::BothLeading, vec![out(ry)]));
        }
        (None, Some(ry)) => (ry, Letter::X),
        (Some(rx), None) => (rx, Letter::Y),
        (None, None) => return Err(Error::Internal("no row at the minimal degree".into())),
    };
    // A minimal-degree element with a nonzero coordinate in the missing slot.
    let second = (n + 1..=sp.cap).find_map(|l| {
        let q = View::<R>::position(l, missing);
        sp.rows
            .iter()
            .find(|r| degree(r) == l && !ring.is_zero(&r.coords[q]))
    });
    let Some(second) = second else {
        return Ok((SelectionCase::SingleShape, vec![out(p)]));
    };
    let (pe, pc) = out(p);
    let (se, sc) = out(second);
    if reduce_in_view(view, &se, std::slice::from_ref(&pe))?.remainder.is_zero() {
        return Ok((SelectionCase::SingleShape, vec![(pe, pc)]));
    }
    Ok((SelectionCase::SecondShape, vec![(pe, pc), (se, sc)]))
}
