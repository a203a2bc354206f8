//! Graded operator expressions and their product ring.
//!
//! The normal form keeps all field symbols to the left of all covariant
//! derivative slots, fields sorted, slots sorted ascending. Rewrites used to
//! reach it:
//!
//! * Leibniz: `D_i ∘ f → f ∘ D_i + (∂_i f)` for every field symbol f,
//! * slot reordering: `D_j D_i → D_i D_j − (ie/ħc) F_ji` for j > i,
//!
//! with Clifford tags multiplied through the exact basis table. Terms of
//! second order in the metric perturbation are dropped on construction, as is
//! everything above the configured velocity-order cutoff. Both grades are
//! additive under multiplication and invariant under the rewrites, so eager
//! truncation commutes with the ring operations.

use super::coeff::Qc;
use super::term::{ConstPow, FieldSymbol, TermKey};
use crate::clifford::{Axis, BasisElement, BasisTable, GaussInt};
use crate::error::Error;
use crate::Result;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Metric-perturbation order at which terms are discarded (the model is
/// first order in h throughout).
pub const MAX_H_ORDER: u32 = 1;

fn basis_table() -> &'static BasisTable {
    static TABLE: OnceLock<BasisTable> = OnceLock::new();
    TABLE.get_or_init(BasisTable::new)
}

/// Velocity-order cutoff for the product ring, with an optional restriction
/// to the A ≡ 0 sector (terms carrying electromagnetic symbols dropped).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    max_grade_v: Option<u32>,
    em: bool,
}

impl Truncation {
    /// Keep terms up to and including velocity order `v`.
    pub fn to_order(v: u32) -> Self {
        Self { max_grade_v: Some(v), em: true }
    }

    /// A truncation with no configured cutoff; products will refuse to run.
    pub fn unset() -> Self {
        Self { max_grade_v: None, em: true }
    }

    /// Work in the A ≡ 0 sector: every term containing an electromagnetic
    /// symbol (including field strengths spawned by slot reordering, which
    /// vanish identically at A = 0) is dropped.
    pub fn without_em(mut self) -> Self {
        self.em = false;
        self
    }

    pub fn em_enabled(&self) -> bool {
        self.em
    }

    pub fn cutoff(&self) -> Result<u32> {
        self.max_grade_v.ok_or(Error::TruncationUnset)
    }

    fn keeps(&self, grade_v: u32, grade_h: u32) -> bool {
        grade_h <= MAX_H_ORDER && grade_v <= self.max_grade_v.unwrap_or(u32::MAX)
    }
}

/// Canonically ordered sum of terms; like terms merged, zeros removed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicOperator {
    terms: BTreeMap<TermKey, Qc>,
}

#[derive(Clone)]
enum Factor {
    Field(FieldSymbol),
    Deriv(Axis),
}

impl SymbolicOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Single-term constructor. Fields may arrive unsorted and deriv slots
    /// unordered; the term is normalized (which can spawn F-field terms from
    /// slot reordering).
    pub fn term(
        coeff: Qc,
        consts: ConstPow,
        fields: Vec<FieldSymbol>,
        derivs: Vec<Axis>,
        tag: BasisElement,
    ) -> Self {
        let mut op = Self::zero();
        let seq: Vec<Factor> = fields
            .into_iter()
            .map(Factor::Field)
            .chain(derivs.into_iter().map(Factor::Deriv))
            .collect();
        normalize_into(&mut op.terms, coeff, consts, seq, tag, &Truncation::unset());
        op
    }

    pub fn constant(coeff: Qc, consts: ConstPow, tag: BasisElement) -> Self {
        Self::term(coeff, consts, vec![], vec![], tag)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &Qc)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, key: &TermKey) -> Qc {
        self.terms.get(key).copied().unwrap_or_else(Qc::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, &c) in &o.terms {
            merge(&mut out.terms, k.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-Qc::one()))
    }

    pub fn scale(&self, s: Qc) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            out.terms.insert(k.clone(), c * s);
        }
        out
    }

    /// Multiplies every term by ħ^a c^b m^d e^f.
    pub fn mul_consts(&self, consts: ConstPow) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            let mut key = k.clone();
            key.consts = key.consts.add(consts);
            out.terms.insert(key, c);
        }
        out
    }

    /// Applies the truncation to an existing operator.
    pub fn truncated(&self, trunc: &Truncation) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            if trunc.keeps(k.grade_v(), k.grade_h()) && (trunc.em_enabled() || !k.has_em()) {
                out.terms.insert(k.clone(), c);
            }
        }
        out
    }

    /// Keeps the sector selected by metric order, presence of
    /// electromagnetic symbols and presence of derivatives of the metric.
    pub fn sector(&self, grade_h: u32, with_em: bool, with_metric_deriv: bool) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            if k.grade_h() == grade_h
                && k.has_em() == with_em
                && k.has_metric_deriv() == with_metric_deriv
            {
                out.terms.insert(k.clone(), c);
            }
        }
        out
    }

    /// Splits into the parts that commute / anticommute with γ⁰.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let mut even = Self::zero();
        let mut odd = Self::zero();
        for (k, &c) in &self.terms {
            if k.tag.is_even() {
                even.terms.insert(k.clone(), c);
            } else {
                odd.terms.insert(k.clone(), c);
            }
        }
        (even, odd)
    }

    /// Formal adjoint: conjugate scalars, reverse factor order, D† = −D,
    /// tags by their Hermiticity sign; then renormalize.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            let sign = k.tag.adjoint_sign() * if k.derivs.len() % 2 == 1 { -1 } else { 1 };
            let coeff = c.conj() * Qc::from_int(sign);
            let seq: Vec<Factor> = k
                .derivs
                .iter()
                .rev()
                .map(|&d| Factor::Deriv(d))
                .chain(k.fields.iter().map(|&f| Factor::Field(f)))
                .collect();
            normalize_into(&mut out.terms, coeff, k.consts, seq, k.tag, &Truncation::unset());
        }
        out
    }

    /// Time derivative: the product rule over field symbols, plus the
    /// A-field term −(ie/ħc)(∂_t A_i) from differentiating through each
    /// covariant slot.
    pub fn d_dt(&self) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            for slot in 0..k.fields.len() {
                let mut fields = k.fields.clone();
                fields[slot] = fields[slot].with_dt();
                let seq: Vec<Factor> = fields
                    .into_iter()
                    .map(Factor::Field)
                    .chain(k.derivs.iter().map(|&d| Factor::Deriv(d)))
                    .collect();
                normalize_into(&mut out.terms, c, k.consts, seq, k.tag, &Truncation::unset());
            }
            for slot in 0..k.derivs.len() {
                let coeff = c * -Qc::i();
                let consts = k.consts.add(ConstPow::new(-1, -1, 0, 1));
                let mut seq: Vec<Factor> =
                    k.fields.iter().map(|&f| Factor::Field(f)).collect();
                for (j, &d) in k.derivs.iter().enumerate() {
                    if j == slot {
                        seq.push(Factor::Field(FieldSymbol::ai(d).with_dt()));
                    } else {
                        seq.push(Factor::Deriv(d));
                    }
                }
                normalize_into(&mut out.terms, coeff, consts, seq, k.tag, &Truncation::unset());
            }
        }
        out
    }

    /// Lines for reports and failure messages.
    pub fn render(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(k, c)| format!("{c} * {k}"))
            .collect()
    }
}

impl fmt::Display for SymbolicOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, line) in self.render().iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{line}")?;
        }
        Ok(())
    }
}

fn merge(map: &mut BTreeMap<TermKey, Qc>, key: TermKey, coeff: Qc) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            let c = *o.get() + coeff;
            if c.is_zero() {
                o.remove();
            } else {
                o.insert(c);
            }
        }
    }
}

fn seq_grade_v(seq: &[Factor]) -> u32 {
    seq.iter()
        .map(|f| match f {
            Factor::Field(s) => s.grade_v(),
            Factor::Deriv(_) => 1,
        })
        .sum()
}

fn seq_grade_h(seq: &[Factor]) -> u32 {
    seq.iter()
        .filter(|f| matches!(f, Factor::Field(s) if s.kind.is_metric()))
        .count() as u32
}

/// Rewrites a factor sequence to normal form, accumulating terms. Both
/// grades are invariant under the rewrites, so truncation is checked once up
/// front per work item.
fn normalize_into(
    out: &mut BTreeMap<TermKey, Qc>,
    coeff: Qc,
    consts: ConstPow,
    seq: Vec<Factor>,
    tag: BasisElement,
    trunc: &Truncation,
) {
    let mut work: Vec<(Qc, ConstPow, Vec<Factor>)> = vec![(coeff, consts, seq)];
    while let Some((c, cp, seq)) = work.pop() {
        if c.is_zero() || !trunc.keeps(seq_grade_v(&seq), seq_grade_h(&seq)) {
            continue;
        }
        if !trunc.em_enabled()
            && seq
                .iter()
                .any(|f| matches!(f, Factor::Field(s) if s.kind.is_em()))
        {
            continue;
        }
        // Push the leftmost derivative standing before a field through it.
        if let Some(i) = (0..seq.len().saturating_sub(1)).find(|&i| {
            matches!(seq[i], Factor::Deriv(_)) && matches!(seq[i + 1], Factor::Field(_))
        }) {
            let (axis, field) = match (&seq[i], &seq[i + 1]) {
                (Factor::Deriv(a), Factor::Field(f)) => (*a, *f),
                _ => unreachable!(),
            };
            let mut swapped = seq.clone();
            swapped.swap(i, i + 1);
            work.push((c, cp, swapped));
            let mut absorbed = seq;
            absorbed.remove(i);
            absorbed[i] = Factor::Field(field.with_dx(axis));
            work.push((c, cp, absorbed));
            continue;
        }
        // All fields are left of all slots. Reorder slots ascending; each
        // out-of-order adjacent pair spawns the field-strength correction
        // D_j D_i = D_i D_j − (ie/ħc) F_ji  (j > i).
        let first_slot = seq
            .iter()
            .position(|f| matches!(f, Factor::Deriv(_)))
            .unwrap_or(seq.len());
        let inversion = (first_slot..seq.len().saturating_sub(1)).find(|&i| {
            match (&seq[i], &seq[i + 1]) {
                (Factor::Deriv(a), Factor::Deriv(b)) => a > b,
                _ => false,
            }
        });
        if let Some(i) = inversion {
            let (hi, lo) = match (&seq[i], &seq[i + 1]) {
                (Factor::Deriv(a), Factor::Deriv(b)) => (*a, *b),
                _ => unreachable!(),
            };
            let mut swapped = seq.clone();
            swapped.swap(i, i + 1);
            work.push((c, cp, swapped));
            // [D_hi, D_lo] = −(ie/ħc) F_{hi,lo} = +(ie/ħc) F_{lo,hi}.
            if let Some((sign, fsym)) = FieldSymbol::fij(hi, lo) {
                let mut corrected = seq;
                corrected.remove(i + 1);
                corrected[i] = Factor::Field(fsym);
                work.push((
                    c * -Qc::i() * Qc::from_int(sign),
                    cp.add(ConstPow::new(-1, -1, 0, 1)),
                    corrected,
                ));
            }
            continue;
        }
        // Canonical: sort fields, emit.
        let mut fields: Vec<FieldSymbol> = Vec::new();
        let mut derivs: Vec<Axis> = Vec::new();
        for f in seq {
            match f {
                Factor::Field(s) => fields.push(s),
                Factor::Deriv(d) => derivs.push(d),
            }
        }
        fields.sort();
        merge(out, TermKey { consts: cp, fields, derivs, tag }, c);
    }
}

/// Product of two operator expressions under the configured truncation.
pub fn sym_mul(
    a: &SymbolicOperator,
    b: &SymbolicOperator,
    trunc: &Truncation,
) -> Result<SymbolicOperator> {
    let cutoff = trunc.cutoff()?;
    let table = basis_table();
    let mut out = SymbolicOperator::zero();
    for (ka, &ca) in a.iter() {
        for (kb, &cb) in b.iter() {
            // Grades are additive; skip dead products before normalizing.
            if ka.grade_h() + kb.grade_h() > MAX_H_ORDER {
                continue;
            }
            if ka.grade_v() + kb.grade_v() > cutoff {
                continue;
            }
            if !trunc.em_enabled() && (ka.has_em() || kb.has_em()) {
                continue;
            }
            let prod = table.product(ka.tag, kb.tag);
            let phase = match prod.phase {
                GaussInt { re, im: 0 } => Qc::from_int(re),
                GaussInt { re: 0, im } => Qc::imag(im, 1),
                _ => unreachable!("basis phases are units"),
            };
            let coeff = ca * cb * phase;
            let consts = ka.consts.add(kb.consts);
            let seq: Vec<Factor> = ka
                .fields
                .iter()
                .map(|&f| Factor::Field(f))
                .chain(ka.derivs.iter().map(|&d| Factor::Deriv(d)))
                .chain(kb.fields.iter().map(|&f| Factor::Field(f)))
                .chain(kb.derivs.iter().map(|&d| Factor::Deriv(d)))
                .collect();
            normalize_into(&mut out.terms, coeff, consts, seq, prod.element, trunc);
        }
    }
    Ok(out)
}

/// [a, b] under the configured truncation.
pub fn commutator(
    a: &SymbolicOperator,
    b: &SymbolicOperator,
    trunc: &Truncation,
) -> Result<SymbolicOperator> {
    Ok(sym_mul(a, b, trunc)?.sub(&sym_mul(b, a, trunc)?))
}

/// {a, b} under the configured truncation.
pub fn anticommutator(
    a: &SymbolicOperator,
    b: &SymbolicOperator,
    trunc: &Truncation,
) -> Result<SymbolicOperator> {
    Ok(sym_mul(a, b, trunc)?.add(&sym_mul(b, a, trunc)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Axis;

    fn d(i: u8) -> Axis {
        Axis::new(i).unwrap()
    }

    fn t8() -> Truncation {
        Truncation::to_order(8)
    }

    #[test]
    fn leibniz_rewrite() {
        // D_1 ∘ h00 → h00 D_1 + (∂_1 h00)
        let dop = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![],
            vec![d(1)],
            BasisElement::Id,
        );
        let h = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![FieldSymbol::h00()],
            vec![],
            BasisElement::Id,
        );
        let prod = sym_mul(&dop, &h, &t8()).unwrap();
        let expect = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![FieldSymbol::h00()],
            vec![d(1)],
            BasisElement::Id,
        )
        .add(&SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![FieldSymbol::h00().with_dx(d(1))],
            vec![],
            BasisElement::Id,
        ));
        assert_eq!(prod, expect);
    }

    #[test]
    fn alpha_product_in_ring() {
        // α¹·α² = iΣ₃ when no fields are involved.
        let a1 = SymbolicOperator::constant(Qc::one(), ConstPow::default(), BasisElement::Alpha(d(1)));
        let a2 = SymbolicOperator::constant(Qc::one(), ConstPow::default(), BasisElement::Alpha(d(2)));
        let prod = sym_mul(&a1, &a2, &t8()).unwrap();
        let expect =
            SymbolicOperator::constant(Qc::i(), ConstPow::default(), BasisElement::Sigma(d(3)));
        assert_eq!(prod, expect);
    }

    #[test]
    fn h_squared_truncated() {
        let h1 = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![FieldSymbol::h00()],
            vec![d(1)],
            BasisElement::Id,
        );
        let h2 = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![FieldSymbol::h00()],
            vec![d(2)],
            BasisElement::Id,
        );
        assert!(sym_mul(&h1, &h2, &t8()).unwrap().is_zero());
    }

    #[test]
    fn cutoff_unset_is_an_error() {
        let x = SymbolicOperator::constant(Qc::one(), ConstPow::default(), BasisElement::Id);
        assert!(sym_mul(&x, &x, &Truncation::unset()).is_err());
    }

    #[test]
    fn slot_reordering_produces_field_strength() {
        // D_2 D_1 = D_1 D_2 + (ie/ħc) F_12
        let d2d1 = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![],
            vec![d(2), d(1)],
            BasisElement::Id,
        );
        let sorted = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![],
            vec![d(1), d(2)],
            BasisElement::Id,
        );
        let f12 = SymbolicOperator::term(
            Qc::i(),
            ConstPow::new(-1, -1, 0, 1),
            vec![FieldSymbol::fij(d(1), d(2)).unwrap().1],
            vec![],
            BasisElement::Id,
        );
        assert_eq!(d2d1, sorted.add(&f12));
    }

    #[test]
    fn even_odd_projection_pair() {
        let mixed = SymbolicOperator::constant(Qc::one(), ConstPow::default(), BasisElement::Gamma0)
            .add(&SymbolicOperator::term(
                Qc::real(1, 2),
                ConstPow::default(),
                vec![],
                vec![d(1)],
                BasisElement::Alpha(d(1)),
            ));
        let (e, o) = mixed.even_odd_split();
        assert_eq!(e.add(&o), mixed);
        let (ee, eo) = e.even_odd_split();
        assert_eq!(ee, e);
        assert!(eo.is_zero());
        let (oe, oo) = o.even_odd_split();
        assert!(oe.is_zero());
        assert_eq!(oo, o);
    }

    #[test]
    fn adjoint_is_an_involution() {
        let x = SymbolicOperator::term(
            Qc::imag(1, 2),
            ConstPow::new(1, 1, 0, 0),
            vec![FieldSymbol::h0i(d(2))],
            vec![d(1), d(2)],
            BasisElement::Alpha(d(3)),
        )
        .add(&SymbolicOperator::term(
            Qc::real(-3, 4),
            ConstPow::default(),
            vec![FieldSymbol::a0()],
            vec![d(2)],
            BasisElement::Gamma0,
        ));
        assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn time_derivative_through_slot() {
        // d/dt D_1 = −(ie/ħc)(∂_t A_1)
        let dop = SymbolicOperator::term(
            Qc::one(),
            ConstPow::default(),
            vec![],
            vec![d(1)],
            BasisElement::Id,
        );
        let dot = dop.d_dt();
        let expect = SymbolicOperator::term(
            -Qc::i(),
            ConstPow::new(-1, -1, 0, 1),
            vec![FieldSymbol::ai(d(1)).with_dt()],
            vec![],
            BasisElement::Id,
        );
        assert_eq!(dot, expect);
    }
}
