//! Unitary conjugation by nested commutators and the iterated off-diagonal
//! elimination built on it.

use super::coeff::Qc;
use super::op::{commutator, sym_mul, SymbolicOperator, Truncation};
use super::term::ConstPow;
use crate::clifford::BasisElement;
use crate::error::Error;
use crate::Result;

/// e^{iS}(H − iħ∂_t)e^{−iS} expanded to `depth` nested commutators:
///
/// ```text
/// H + i[S,H] + (i²/2!)[S,[S,H]] + …            (conjugation series)
/// − ħ( Ṡ + (i/2)[S,Ṡ] + (i²/6)[S,[S,Ṡ]] + … )  (time-derivative series)
/// ```
///
/// with Ṡ formed by incrementing ∂_t on every field symbol (and through the
/// covariant slots). Both series are truncated by the configured grades.
pub fn bch_transform(
    h: &SymbolicOperator,
    s: &SymbolicOperator,
    depth: usize,
    trunc: &Truncation,
) -> Result<SymbolicOperator> {
    if depth == 0 {
        return Err(Error::Config("bch_transform requires depth >= 1".into()));
    }
    let mut out = h.clone();
    let mut nested = h.clone(); // ad_S^n(H)
    let mut factorial: i64 = 1;
    for n in 1..=depth as u32 {
        nested = commutator(s, &nested, trunc)?;
        if nested.is_zero() {
            break;
        }
        factorial *= n as i64;
        let coeff = Qc::i_pow(n) * Qc::real(1, factorial);
        out = out.add(&nested.scale(coeff));
    }

    let s_dot = s.d_dt().truncated(trunc);
    if !s_dot.is_zero() {
        let mut nested = s_dot.clone(); // ad_S^n(Ṡ)
        let mut factorial: i64 = 1; // (n+1)!
        for n in 0..depth as u32 {
            if n > 0 {
                nested = commutator(s, &nested, trunc)?;
                if nested.is_zero() {
                    break;
                }
            }
            factorial *= (n + 1) as i64;
            let coeff = -Qc::i_pow(n) * Qc::real(1, factorial);
            out = out.add(&nested.scale(coeff).mul_consts(ConstPow::new(1, 0, 0, 0)));
        }
    }
    Ok(out.truncated(trunc))
}

/// Generator of one elimination step, S = −iγ⁰O/(2mc²).
pub fn elimination_generator(odd: &SymbolicOperator, trunc: &Truncation) -> Result<SymbolicOperator> {
    let gamma0 = SymbolicOperator::constant(Qc::one(), ConstPow::default(), BasisElement::Gamma0);
    Ok(sym_mul(&gamma0, odd, trunc)?
        .scale(Qc::imag(-1, 2))
        .mul_consts(ConstPow::new(0, -2, -1, 0)))
}

/// One step of the per-grade diagnostics attached to a reduction.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub step: usize,
    pub even_terms: usize,
    pub odd_terms: usize,
    pub odd_min_grade: Option<u32>,
}

/// Result of the iterated block diagonalization.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// Even (block-diagonal) Hamiltonian, including the rest-mass term.
    pub even: SymbolicOperator,
    /// Whatever odd part survives the final step (empty on success).
    pub residual_odd: SymbolicOperator,
    pub steps: Vec<ReductionStep>,
}

const STEP_DEPTHS: [usize; 3] = [4, 3, 3];

/// Applies three successive eliminations U, U′, U″, each built from the
/// current odd part, under the supplied truncation. On success every
/// surviving odd term is above the cutoff (so the window holds the even
/// Hamiltonian alone).
pub fn fw_reduce_full(h: &SymbolicOperator, trunc: Truncation) -> Result<Reduction> {
    let mut current = h.truncated(&trunc);
    let mut steps = Vec::new();
    for (n, &depth) in STEP_DEPTHS.iter().enumerate() {
        let (_, odd) = current.even_odd_split();
        if odd.is_zero() {
            break;
        }
        let s = elimination_generator(&odd, &trunc)?;
        current = bch_transform(&current, &s, depth, &trunc)?;
        let (even, odd_after) = current.even_odd_split();
        steps.push(ReductionStep {
            step: n + 1,
            even_terms: even.num_terms(),
            odd_terms: odd_after.num_terms(),
            odd_min_grade: odd_after.iter().map(|(k, _)| k.grade_v()).min(),
        });
    }
    let (even, residual_odd) = current.even_odd_split();
    Ok(Reduction { even, residual_odd, steps })
}

/// As [`fw_reduce_full`] but fails on any surviving odd term at or below
/// the cutoff, reporting the offender.
pub fn fw_reduce(h: &SymbolicOperator, target_v_order: u32) -> Result<SymbolicOperator> {
    let red = fw_reduce_full(h, Truncation::to_order(target_v_order))?;
    if let Some((key, coeff)) = red.residual_odd.iter().next() {
        return Err(Error::ResidualOddTerm(format!("{coeff} * {key}")));
    }
    Ok(red.even)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fwsym::model;

    #[test]
    fn bch_with_zero_generator_is_identity_map() {
        let h = model::rest_mass().add(&model::free_odd());
        let out = bch_transform(&h, &SymbolicOperator::zero(), 3, &Truncation::to_order(4)).unwrap();
        assert_eq!(out, h.truncated(&Truncation::to_order(4)));
    }

    #[test]
    fn depth_zero_rejected() {
        let h = model::rest_mass();
        assert!(bch_transform(&h, &SymbolicOperator::zero(), 0, &Truncation::to_order(4)).is_err());
    }

    #[test]
    fn leading_commutator_cancels_odd_part() {
        // i[S, mc²γ⁰] = −O exactly, for S built from any odd O.
        let trunc = Truncation::to_order(6);
        let odd = model::odd_block();
        let s = elimination_generator(&odd, &trunc).unwrap();
        let cancel = commutator(&s, &model::rest_mass(), &trunc)
            .unwrap()
            .scale(Qc::i());
        assert_eq!(cancel, odd.scale(-Qc::one()).truncated(&trunc));
    }

    #[test]
    fn single_step_on_free_hamiltonian() {
        // One elimination leaves the kinetic even term and pushes the odd
        // residual to third order.
        let trunc = Truncation::to_order(4);
        let h = model::rest_mass().add(&model::free_odd());
        let (_, odd) = h.even_odd_split();
        let s = elimination_generator(&odd, &trunc).unwrap();
        let out = bch_transform(&h, &s, 4, &trunc).unwrap();
        let (even, odd_after) = out.even_odd_split();
        let kinetic = model::kinetic_term();
        for (k, c) in kinetic.iter() {
            assert_eq!(even.coeff_of(k), *c, "missing kinetic term {k}");
        }
        let min_grade = odd_after.iter().map(|(k, _)| k.grade_v()).min();
        assert_eq!(min_grade, Some(3));
    }
}
