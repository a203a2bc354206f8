//! Non-commutative symbolic engine for the order-by-order block
//! diagonalization of the weak-field Dirac Hamiltonian.
//!
//! Operators are graded sums of terms (exact Gaussian-rational scalar ×
//! powers of ħ, c, m, e × commuting field symbols with derivative
//! multi-indices × ordered covariant-derivative slots × a Dirac basis tag),
//! graded by velocity order and by order in the metric perturbation. The
//! engine multiplies, commutes, conjugates and time-differentiates such
//! expressions exactly, and [`bch::fw_reduce`] runs the three-step
//! elimination of the block-off-diagonal part.
//!
//! Velocity grading: each derivative slot or A_i counts 1, A₀ and each field
//! strength count 2, a time derivative counts 2, and the metric components
//! count 0 (their order is tracked separately). The generator of each
//! elimination step divides by mc², which carries no grade, so a step built
//! from an odd part of grade g produces new odd terms two grades higher
//! through the commutator chain.

pub mod bch;
pub mod coeff;
pub mod model;
pub mod op;
pub mod term;

pub use bch::{bch_transform, elimination_generator, fw_reduce, fw_reduce_full, Reduction};
pub use coeff::Qc;
pub use model::{charge_transform_check, ChargeReport};
pub use op::{anticommutator, commutator, sym_mul, SymbolicOperator, Truncation};
pub use term::{ConstPow, FieldKind, FieldSymbol, TermKey};

use crate::Result;

/// Term-by-term comparison of two canonicalized operators.
#[derive(Debug, Clone)]
pub struct MatchReport {
    pub matched: usize,
    /// Terms of the expectation that are absent or carry a wrong
    /// coefficient.
    pub missing: Vec<String>,
    /// Terms present in the result but not in the expectation.
    pub unexpected: Vec<String>,
    pub pass: bool,
}

/// Compares `actual` against `expected` term by term.
pub fn compare_term_sets(actual: &SymbolicOperator, expected: &SymbolicOperator) -> MatchReport {
    let mut matched = 0;
    let mut missing = Vec::new();
    let mut unexpected = Vec::new();
    for (k, &c) in expected.iter() {
        let got = actual.coeff_of(k);
        if got == c {
            matched += 1;
        } else {
            missing.push(format!("expected {c} * {k}, got {got}"));
        }
    }
    for (k, &c) in actual.iter() {
        if expected.coeff_of(k).is_zero() {
            unexpected.push(format!("{c} * {k}"));
        }
    }
    let pass = missing.is_empty() && unexpected.is_empty();
    MatchReport { matched, missing, unexpected, pass }
}

/// Per-grade term census of an operator.
pub fn grade_census(op: &SymbolicOperator) -> Vec<(u32, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for (k, _) in op.iter() {
        *counts.entry(k.grade_v()).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

/// Aggregate verification of the symbolic pipeline: the free-particle
/// kinetic tower, the first-order metric sector, the squared-odd-block
/// identity and the charge transformation.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub free_tower: MatchReport,
    pub gravity_sector: MatchReport,
    pub odd_square_block: MatchReport,
    pub charge: ChargeReport,
    pub even_census: Vec<(u32, usize)>,
    pub residual_odd_terms: usize,
    pub pass: bool,
}

/// Runs the full symbolic verification.
pub fn verify_reduction() -> Result<VerifyReport> {
    // Free particle: reduce mc²γ⁰ + O_free and compare the EM-free sector.
    let free = model::rest_mass().add(&model::free_odd());
    let free_red = fw_reduce_full(&free, Truncation::to_order(4).without_em())?;
    let free_tower = compare_term_sets(
        &free_red.even.sector(0, false, false),
        &model::kinetic_tower_target(),
    );

    // Gravity on, EM off: first-order metric sector without derivatives of
    // h, restricted to second velocity order (the reduction also yields the
    // metric-dressed quartic corrections above it).
    let grav_red = fw_reduce_full(&model::hamiltonian(false), Truncation::to_order(4).without_em())?;
    let gravity_sector = compare_term_sets(
        &grav_red.even.sector(1, false, false).truncated(&Truncation::to_order(2)),
        &model::gravity_sector_target(),
    );

    // γ⁰O²/(2mc²) for the full odd block, non-derivative part.
    let trunc = Truncation::to_order(4);
    let odd = model::odd_block();
    let osq = sym_mul(&odd, &odd, &trunc)?;
    let gamma0 = SymbolicOperator::constant(
        Qc::one(),
        ConstPow::default(),
        crate::clifford::BasisElement::Gamma0,
    );
    let block = sym_mul(&gamma0, &osq, &trunc)?
        .scale(Qc::real(1, 2))
        .mul_consts(ConstPow::new(0, -2, -1, 0));
    let block_nodh = {
        let mut keep = SymbolicOperator::zero();
        for h in 0..=1 {
            for em in [false, true] {
                keep = keep.add(&block.sector(h, em, false));
            }
        }
        keep
    };
    let odd_square_block = compare_term_sets(&block_nodh, &model::odd_square_block_target());

    let charge = charge_transform_check();

    let pass = free_tower.pass
        && gravity_sector.pass
        && odd_square_block.pass
        && charge.pass
        && grav_red.residual_odd.is_zero()
        && free_red.residual_odd.is_zero();
    Ok(VerifyReport {
        free_tower,
        gravity_sector,
        odd_square_block,
        charge,
        even_census: grade_census(&grav_red.even),
        residual_odd_terms: grav_red.residual_odd.num_terms(),
        pass,
    })
}
