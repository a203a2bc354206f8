//! The weak-field spin-1/2 Hamiltonian blocks, the charge-preserving field
//! redefinition, and the frozen expressions the reduction is checked
//! against.
//!
//! All expressions follow the index conventions of [`super::term`]: lowered
//! Cartesian components, covariant slots D_i = ∂_i − (ie/ħc)A_i, and
//! F_ij = ∂_iA_j − ∂_jA_i with B_k = ½ε_{kij}F_ij.

use super::coeff::Qc;
use super::op::{sym_mul, SymbolicOperator, Truncation};
use super::term::{ConstPow, FieldSymbol};
use crate::clifford::{epsilon, Axis, BasisElement};

type Op = SymbolicOperator;

fn term(
    coeff: Qc,
    consts: ConstPow,
    fields: Vec<FieldSymbol>,
    derivs: Vec<Axis>,
    tag: BasisElement,
) -> Op {
    Op::term(coeff, consts, fields, derivs, tag)
}

const HBAR_C: ConstPow = ConstPow { hbar: 1, c: 1, m: 0, e: 0 };
const NONE: ConstPow = ConstPow { hbar: 0, c: 0, m: 0, e: 0 };

/// Rest-mass block mc²γ⁰.
pub fn rest_mass() -> Op {
    Op::constant(Qc::one(), ConstPow::new(0, 2, 1, 0), BasisElement::Gamma0)
}

/// Free odd block −iħc D_j α^j.
pub fn free_odd() -> Op {
    let mut out = Op::zero();
    for j in Axis::ALL {
        out = out.add(&term(
            Qc::imag(-1, 1),
            HBAR_C,
            vec![],
            vec![j],
            BasisElement::Alpha(j),
        ));
    }
    out
}

/// Even (block-diagonal) part of the charge-corrected Hamiltonian.
pub fn even_block(with_em: bool) -> Op {
    let mut out = Op::zero();
    if with_em {
        // e A₀
        out = out.add(&term(
            Qc::one(),
            ConstPow::new(0, 0, 0, 1),
            vec![FieldSymbol::a0()],
            vec![],
            BasisElement::Id,
        ));
    }
    // (mc²/2) h₀₀ γ⁰
    out = out.add(&term(
        Qc::real(1, 2),
        ConstPow::new(0, 2, 1, 0),
        vec![FieldSymbol::h00()],
        vec![],
        BasisElement::Gamma0,
    ));
    for i in Axis::ALL {
        // −iħc h₀ᵢ D_i
        out = out.add(&term(
            Qc::imag(-1, 1),
            HBAR_C,
            vec![FieldSymbol::h0i(i)],
            vec![i],
            BasisElement::Id,
        ));
        // −(iħc/4) ∂_i h₀ᵢ
        out = out.add(&term(
            Qc::imag(-1, 4),
            HBAR_C,
            vec![FieldSymbol::h0i(i).with_dx(i)],
            vec![],
            BasisElement::Id,
        ));
    }
    // +(ħc/4) ε^{ijk} (∂_i h₀ⱼ) Σ_k
    for i in Axis::ALL {
        for j in Axis::ALL {
            for k in Axis::ALL {
                let e = epsilon(i, j, k);
                if e != 0 {
                    out = out.add(&term(
                        Qc::real(e, 4),
                        HBAR_C,
                        vec![FieldSymbol::h0i(j).with_dx(i)],
                        vec![],
                        BasisElement::Sigma(k),
                    ));
                }
            }
        }
    }
    // −(3iħ/8) ∂_t tr h  +  (iħ/4) ∂_t h₀₀
    out = out.add(&term(
        Qc::imag(-3, 8),
        ConstPow::new(1, 0, 0, 0),
        vec![FieldSymbol::trh().with_dt()],
        vec![],
        BasisElement::Id,
    ));
    out.add(&term(
        Qc::imag(1, 4),
        ConstPow::new(1, 0, 0, 0),
        vec![FieldSymbol::h00().with_dt()],
        vec![],
        BasisElement::Id,
    ))
}

/// Odd (block-off-diagonal) part of the charge-corrected Hamiltonian.
pub fn odd_block() -> Op {
    let mut out = free_odd();
    for j in Axis::ALL {
        // −(iħc/2) h₀₀ D_j α^j
        out = out.add(&term(
            Qc::imag(-1, 2),
            HBAR_C,
            vec![FieldSymbol::h00()],
            vec![j],
            BasisElement::Alpha(j),
        ));
    }
    // −(iħc/2) h_ij D_j α^i over all ordered pairs
    for i in Axis::ALL {
        for j in Axis::ALL {
            out = out.add(&term(
                Qc::imag(-1, 2),
                HBAR_C,
                vec![FieldSymbol::hij(i, j)],
                vec![j],
                BasisElement::Alpha(i),
            ));
        }
    }
    for i in Axis::ALL {
        // +(iħc/8)(∂_i tr h) α^i − (iħc/4)(∂_i h₀₀) α^i
        out = out.add(&term(
            Qc::imag(1, 8),
            HBAR_C,
            vec![FieldSymbol::trh().with_dx(i)],
            vec![],
            BasisElement::Alpha(i),
        ));
        out = out.add(&term(
            Qc::imag(-1, 4),
            HBAR_C,
            vec![FieldSymbol::h00().with_dx(i)],
            vec![],
            BasisElement::Alpha(i),
        ));
        // +(iħc/4)(∂_t h₀ᵢ) α^i
        out = out.add(&term(
            Qc::imag(1, 4),
            HBAR_C,
            vec![FieldSymbol::h0i(i).with_dt()],
            vec![],
            BasisElement::Alpha(i),
        ));
    }
    out
}

/// Full Hamiltonian mc²γ⁰ + E + O, with or without the electromagnetic
/// sector. Gravity derivative terms are always carried.
pub fn hamiltonian(with_em: bool) -> Op {
    rest_mass().add(&even_block(with_em)).add(&odd_block())
}

/// Electric field component E_i = −∂_iA₀ − (1/c)∂_tA_i as an expression.
pub fn efield(i: Axis) -> Op {
    term(
        -Qc::one(),
        NONE,
        vec![FieldSymbol::a0().with_dx(i)],
        vec![],
        BasisElement::Id,
    )
    .add(&term(
        -Qc::one(),
        ConstPow::new(0, -1, 0, 0),
        vec![FieldSymbol::ai(i).with_dt()],
        vec![],
        BasisElement::Id,
    ))
}

/// Magnetic field component B_k = ½ε_{kij}F_ij as an expression.
pub fn bfield(k: Axis) -> Op {
    let mut out = Op::zero();
    for i in Axis::ALL {
        for j in Axis::ALL {
            let e = epsilon(k, i, j);
            if e == 0 {
                continue;
            }
            if let Some((sign, f)) = FieldSymbol::fij(i, j) {
                out = out.add(&term(
                    Qc::real(e * sign, 2),
                    NONE,
                    vec![f],
                    vec![],
                    BasisElement::Id,
                ));
            }
        }
    }
    out
}

/// Kinetic even term −(ħ²/2m) D² γ⁰.
pub fn kinetic_term() -> Op {
    let mut out = Op::zero();
    for i in Axis::ALL {
        out = out.add(&term(
            Qc::real(-1, 2),
            ConstPow::new(2, 0, -1, 0),
            vec![],
            vec![i, i],
            BasisElement::Gamma0,
        ));
    }
    out
}

/// Free-particle target of the reduction below fifth order:
/// mc²γ⁰ − (ħ²/2m)∇²γ⁰ − (ħ⁴/8m³c²)(∇²)²γ⁰.
pub fn kinetic_tower_target() -> Op {
    let mut out = rest_mass().add(&kinetic_term());
    let quartic = ConstPow::new(4, -2, -3, 0);
    for i in Axis::ALL {
        out = out.add(&term(
            Qc::real(-1, 8),
            quartic,
            vec![],
            vec![i, i, i, i],
            BasisElement::Gamma0,
        ));
    }
    for i in Axis::ALL {
        for j in Axis::ALL {
            if i < j {
                out = out.add(&term(
                    Qc::real(-1, 4),
                    quartic,
                    vec![],
                    vec![i, i, j, j],
                    BasisElement::Gamma0,
                ));
            }
        }
    }
    out
}

/// Metric sector of the reduced even Hamiltonian at first order in h, with
/// electromagnetic fields off and metric derivatives excluded:
///
/// ```text
/// (mc²/2)h₀₀γ⁰ − (ħ²/4m)h₀₀∇²γ⁰ − (ħ²/2m)h_ij∂_i∂_jγ⁰ − iħc h₀ᵢ∂_i
/// ```
///
/// which is the ordered-product form of the anticommutator-symmetrized
/// display (the remainders are all metric-derivative terms).
pub fn gravity_sector_target() -> Op {
    let mut out = term(
        Qc::real(1, 2),
        ConstPow::new(0, 2, 1, 0),
        vec![FieldSymbol::h00()],
        vec![],
        BasisElement::Gamma0,
    );
    let quad = ConstPow::new(2, 0, -1, 0);
    for i in Axis::ALL {
        out = out.add(&term(
            Qc::real(-1, 4),
            quad,
            vec![FieldSymbol::h00()],
            vec![i, i],
            BasisElement::Gamma0,
        ));
        out = out.add(&term(
            Qc::imag(-1, 1),
            HBAR_C,
            vec![FieldSymbol::h0i(i)],
            vec![i],
            BasisElement::Id,
        ));
    }
    for i in Axis::ALL {
        for j in Axis::ALL {
            // −(ħ²/2m) h_ij ∂_i∂_j over all ordered pairs; slots pre-sorted
            // since the two orderings coincide at A = 0.
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            out = out.add(&term(
                Qc::real(-1, 2),
                quad,
                vec![FieldSymbol::hij(i, j)],
                vec![a, b],
                BasisElement::Gamma0,
            ));
        }
    }
    out
}

/// Non-derivative part of γ⁰O²/(2mc²) for the full (gravity and EM) odd
/// block:
///
/// ```text
/// γ⁰[ −(ħ²/2m)(1+h₀₀)D² − (ħe/2mc)(1+h₀₀)B·Σ
///     −(ħ²/2m)h_ij D_iD_j − (ħe/4mc)ε^{ijl}h_jk F_ik Σ_l ]
/// ```
pub fn odd_square_block_target() -> Op {
    let gamma0 = Op::constant(Qc::one(), NONE, BasisElement::Gamma0);
    let trunc = Truncation::to_order(8);
    let quad = ConstPow::new(2, 0, -1, 0);
    let zeeman = ConstPow::new(1, -1, -1, 1);

    let mut body = Op::zero();
    for i in Axis::ALL {
        body = body.add(&term(Qc::real(-1, 2), quad, vec![], vec![i, i], BasisElement::Id));
        body = body.add(&term(
            Qc::real(-1, 2),
            quad,
            vec![FieldSymbol::h00()],
            vec![i, i],
            BasisElement::Id,
        ));
    }
    for k in Axis::ALL {
        let spin = sym_mul(
            &bfield(k),
            &Op::constant(Qc::one(), NONE, BasisElement::Sigma(k)),
            &trunc,
        )
        .unwrap();
        body = body.add(&spin.scale(Qc::real(-1, 2)).mul_consts(zeeman));
        let spin_h = sym_mul(
            &term(Qc::one(), NONE, vec![FieldSymbol::h00()], vec![], BasisElement::Id),
            &spin,
            &trunc,
        )
        .unwrap();
        body = body.add(&spin_h.scale(Qc::real(-1, 2)).mul_consts(zeeman));
    }
    for i in Axis::ALL {
        for j in Axis::ALL {
            body = body.add(&term(
                Qc::real(-1, 2),
                quad,
                vec![FieldSymbol::hij(i, j)],
                vec![i, j],
                BasisElement::Id,
            ));
        }
    }
    // −(ħe/4mc) ε^{ijl} h_jk F_ik Σ_l
    for i in Axis::ALL {
        for j in Axis::ALL {
            for l in Axis::ALL {
                let e = epsilon(i, j, l);
                if e == 0 {
                    continue;
                }
                for k in Axis::ALL {
                    if let Some((sign, f)) = FieldSymbol::fij(i, k) {
                        body = body.add(&term(
                            Qc::real(-e * sign, 4),
                            zeeman,
                            vec![FieldSymbol::hij(j, k), f],
                            vec![],
                            BasisElement::Sigma(l),
                        ));
                    }
                }
            }
        }
    }
    sym_mul(&gamma0, &body, &trunc).unwrap()
}

/// Charge-preserving field redefinition
/// T = 1 − tr(h)/2 − h₀₀/4 − (h₀ᵢ/4)γ⁰γ^i.
pub fn charge_factor(trh: bool, h00: bool, h0i: bool) -> Op {
    let mut out = Op::constant(Qc::one(), NONE, BasisElement::Id);
    if trh {
        out = out.add(&term(
            Qc::real(-1, 2),
            NONE,
            vec![FieldSymbol::trh()],
            vec![],
            BasisElement::Id,
        ));
    }
    if h00 {
        out = out.add(&term(
            Qc::real(-1, 4),
            NONE,
            vec![FieldSymbol::h00()],
            vec![],
            BasisElement::Id,
        ));
    }
    if h0i {
        for i in Axis::ALL {
            out = out.add(&term(
                Qc::real(-1, 4),
                NONE,
                vec![FieldSymbol::h0i(i)],
                vec![],
                BasisElement::Alpha(i),
            ));
        }
    }
    out
}

/// Charge-density kernel (1 − tr(h) − h₀₀/2) − (h₀ᵢ/2)γ⁰γ^i.
pub fn charge_kernel(trh: bool, h00: bool, h0i: bool) -> Op {
    let mut out = Op::constant(Qc::one(), NONE, BasisElement::Id);
    if trh {
        out = out.add(&term(
            -Qc::one(),
            NONE,
            vec![FieldSymbol::trh()],
            vec![],
            BasisElement::Id,
        ));
    }
    if h00 {
        out = out.add(&term(
            Qc::real(-1, 2),
            NONE,
            vec![FieldSymbol::h00()],
            vec![],
            BasisElement::Id,
        ));
    }
    if h0i {
        for i in Axis::ALL {
            out = out.add(&term(
                Qc::real(-1, 2),
                NONE,
                vec![FieldSymbol::h0i(i)],
                vec![],
                BasisElement::Alpha(i),
            ));
        }
    }
    out
}

/// Outcome of the charge-transformation verification.
#[derive(Debug, Clone)]
pub struct ChargeReport {
    /// Residue of T⁻¹† M T⁻¹ − 1 at first order in h (empty on success).
    pub residual: Op,
    /// T†T − M at first order (a second witness of the same identity).
    pub factorization_residual: Op,
    pub pass: bool,
}

/// Verifies that the field redefinition renders the charge density
/// canonical: with ψ → Tψ the kernel transforms as T⁻¹† M T⁻¹, which must be
/// the identity up to second order in h. Equivalently T†T = M + O(h²);
/// both residues are reported.
pub fn charge_transform_check_with(trh: bool, h00: bool, h0i: bool) -> ChargeReport {
    let trunc = Truncation::to_order(4);
    let one = Op::constant(Qc::one(), NONE, BasisElement::Id);
    let t = charge_factor(trh, h00, h0i);
    let m = charge_kernel(trh, h00, h0i);
    // T = 1 + t₁ with t₁ of first order, so T⁻¹ = 1 − t₁ up to O(h²).
    let t_inv = one.sub(&t.sub(&one));
    let transformed = sym_mul(&t_inv.adjoint(), &sym_mul(&m, &t_inv, &trunc).unwrap(), &trunc)
        .unwrap();
    let residual = transformed.sub(&one);
    let factorization_residual = sym_mul(&t.adjoint(), &t, &trunc).unwrap().sub(&m);
    let pass = residual.is_zero() && factorization_residual.is_zero();
    ChargeReport { residual, factorization_residual, pass }
}

/// Full check with every metric component active.
pub fn charge_transform_check() -> ChargeReport {
    charge_transform_check_with(true, true, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_the_sum_recovers_the_blocks() {
        let e = even_block(true);
        let o = odd_block();
        let (e2, o2) = e.add(&o).even_odd_split();
        assert_eq!(e2, e);
        assert_eq!(o2, o);
    }

    #[test]
    fn charge_check_trivial_when_h_is_zero() {
        let rep = charge_transform_check_with(false, false, false);
        assert!(rep.pass);
    }

    #[test]
    fn charge_check_h00_only() {
        let rep = charge_transform_check_with(false, true, false);
        assert!(rep.pass, "residual: {}", rep.residual);
    }

    #[test]
    fn charge_check_full() {
        let rep = charge_transform_check();
        assert!(
            rep.pass,
            "residual: {}\nfactorization: {}",
            rep.residual, rep.factorization_residual
        );
    }

    #[test]
    fn bfield_matches_slot_commutator() {
        // [D_i, D_j] = −(ie/ħc) F_ij must make ε-contracted slot pairs equal
        // the magnetic field: ½ε_{kij} D_iD_j = −(ie/2ħc) B_k.
        let trunc = Truncation::to_order(8);
        for k in Axis::ALL {
            let mut contracted = Op::zero();
            for i in Axis::ALL {
                for j in Axis::ALL {
                    let e = epsilon(k, i, j);
                    if e != 0 {
                        contracted = contracted.add(&Op::term(
                            Qc::real(e, 2),
                            ConstPow::default(),
                            vec![],
                            vec![i, j],
                            BasisElement::Id,
                        ));
                    }
                }
            }
            let expect = bfield(k)
                .scale(Qc::imag(-1, 2))
                .mul_consts(ConstPow::new(-1, -1, 0, 1));
            assert_eq!(contracted, expect, "axis {k}");
            let _ = trunc;
        }
    }
}
