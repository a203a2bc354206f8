//! Exact Dirac matrix algebra in the Pauli representation.
//!
//! Matrix entries live in the Gaussian integers ℤ[i], so every identity the
//! rest of the crate leans on is checked exactly rather than to a tolerance.
//! Metric signature is (+,−,−,−); spatial indices are raised with
//! η^{ij} = −δ^{ij}. All sign conventions are centralized in this module.

use crate::error::Error;
use crate::Result;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Gaussian integer a + b·i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, m) => write!(f, "{m}i"),
            (r, m) if m > 0 => write!(f, "{r}+{m}i"),
            (r, m) => write!(f, "{r}{m}i"),
        }
    }
}

/// Spatial axis 1..=3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Axis(u8);

impl Axis {
    pub fn new(i: u8) -> Result<Self> {
        if (1..=3).contains(&i) {
            Ok(Axis(i))
        } else {
            Err(Error::InvalidAxis(i))
        }
    }

    pub const X: Axis = Axis(1);
    pub const Y: Axis = Axis(2);
    pub const Z: Axis = Axis(3);
    pub const ALL: [Axis; 3] = [Axis(1), Axis(2), Axis(3)];

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Zero-based index for array access.
    pub fn idx0(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Levi-Civita symbol ε_{ijk} on 1-based indices.
pub fn epsilon(i: Axis, j: Axis, k: Axis) -> i64 {
    match (i.0, j.0, k.0) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1,
        _ => 0,
    }
}

/// η^{ij} = −δ^{ij} for spatial indices (signature +,−,−,−).
pub fn eta_spatial(i: Axis, j: Axis) -> i64 {
    if i == j {
        -1
    } else {
        0
    }
}

/// Named generator in the Pauli representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Identity,
    Gamma0,
    /// γ^i, anti-Hermitian.
    Gamma(Axis),
    /// α^i = γ⁰γ^i, Hermitian.
    Alpha(Axis),
    /// Σ_k = diag(σ_k, σ_k), Hermitian.
    SigmaBig(Axis),
    /// 4×4 embedding diag(σ_k, σ_k) of the Pauli matrix (same matrix as
    /// `SigmaBig`, kept as a distinct label).
    Pauli(Axis),
}

/// One of the sixteen basis products of the Dirac algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    Id,
    Gamma0,
    Gamma(Axis),
    Alpha(Axis),
    Sigma(Axis),
    Gamma0Sigma(Axis),
    Gamma5,
    Gamma0Gamma5,
}

impl BasisElement {
    pub const COUNT: usize = 16;

    /// Enumerates all sixteen elements in a fixed order.
    pub fn all() -> [BasisElement; 16] {
        use BasisElement::*;
        [
            Id,
            Gamma0,
            Gamma(Axis::X),
            Gamma(Axis::Y),
            Gamma(Axis::Z),
            Alpha(Axis::X),
            Alpha(Axis::Y),
            Alpha(Axis::Z),
            Sigma(Axis::X),
            Sigma(Axis::Y),
            Sigma(Axis::Z),
            Gamma0Sigma(Axis::X),
            Gamma0Sigma(Axis::Y),
            Gamma0Sigma(Axis::Z),
            Gamma5,
            Gamma0Gamma5,
        ]
    }

    fn ordinal(self) -> usize {
        use BasisElement::*;
        match self {
            Id => 0,
            Gamma0 => 1,
            Gamma(a) => 1 + a.index(),
            Alpha(a) => 4 + a.index(),
            Sigma(a) => 7 + a.index(),
            Gamma0Sigma(a) => 10 + a.index(),
            Gamma5 => 14,
            Gamma0Gamma5 => 15,
        }
    }

    /// True when the element commutes with γ⁰ (block-diagonal part).
    pub fn is_even(self) -> bool {
        use BasisElement::*;
        matches!(self, Id | Gamma0 | Sigma(_) | Gamma0Sigma(_))
    }

    /// Matrix of the element.
    pub fn matrix(self) -> CliffordElement {
        use BasisElement::*;
        match self {
            Id => CliffordElement::identity(),
            Gamma0 => CliffordElement::gamma0(),
            Gamma(a) => CliffordElement::gamma(a),
            Alpha(a) => CliffordElement::alpha(a),
            Sigma(a) => CliffordElement::sigma_big(a),
            Gamma0Sigma(a) => CliffordElement::gamma0().mul(&CliffordElement::sigma_big(a)),
            Gamma5 => CliffordElement::gamma5(),
            Gamma0Gamma5 => CliffordElement::gamma0().mul(&CliffordElement::gamma5()),
        }
    }

    /// Sign s of the adjoint: B† = s·B. Every basis element is either
    /// Hermitian or anti-Hermitian.
    pub fn adjoint_sign(self) -> i64 {
        use BasisElement::*;
        match self {
            Gamma(_) | Gamma0Gamma5 => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BasisElement::*;
        match self {
            Id => write!(f, "1"),
            Gamma0 => write!(f, "g0"),
            Gamma(a) => write!(f, "g{a}"),
            Alpha(a) => write!(f, "a{a}"),
            Sigma(a) => write!(f, "S{a}"),
            Gamma0Sigma(a) => write!(f, "g0S{a}"),
            Gamma5 => write!(f, "g5"),
            Gamma0Gamma5 => write!(f, "g0g5"),
        }
    }
}

/// Exact 4×4 matrix over ℤ[i] with an optional basis label.
#[derive(Debug, Clone, Eq)]
pub struct CliffordElement {
    pub entries: [[GaussInt; 4]; 4],
    pub label: Option<BasisElement>,
}

// Equality is on entries only; the label is bookkeeping.
impl PartialEq for CliffordElement {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

/// Exact 2×2 Pauli matrix σ_k over ℤ[i].
pub fn pauli(k: Axis) -> [[GaussInt; 2]; 2] {
    let z = GaussInt::ZERO;
    let one = GaussInt::ONE;
    let i = GaussInt::I;
    match k.index() {
        1 => [[z, one], [one, z]],
        2 => [[z, -i], [i, z]],
        _ => [[one, z], [z, -one]],
    }
}

impl CliffordElement {
    pub fn zero() -> Self {
        Self { entries: [[GaussInt::ZERO; 4]; 4], label: None }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for d in 0..4 {
            m.entries[d][d] = GaussInt::ONE;
        }
        m.label = Some(BasisElement::Id);
        m
    }

    /// γ⁰ = diag(1, 1, −1, −1).
    pub fn gamma0() -> Self {
        let mut m = Self::zero();
        m.entries[0][0] = GaussInt::ONE;
        m.entries[1][1] = GaussInt::ONE;
        m.entries[2][2] = -GaussInt::ONE;
        m.entries[3][3] = -GaussInt::ONE;
        m.label = Some(BasisElement::Gamma0);
        m
    }

    /// γ^i with σ^i in the off-diagonal blocks, upper block positive.
    pub fn gamma(i: Axis) -> Self {
        let s = pauli(i);
        let mut m = Self::zero();
        for r in 0..2 {
            for c in 0..2 {
                m.entries[r][c + 2] = s[r][c];
                m.entries[r + 2][c] = -s[r][c];
            }
        }
        m.label = Some(BasisElement::Gamma(i));
        m
    }

    /// α^i = γ⁰γ^i: σ^i in both off-diagonal blocks.
    pub fn alpha(i: Axis) -> Self {
        let s = pauli(i);
        let mut m = Self::zero();
        for r in 0..2 {
            for c in 0..2 {
                m.entries[r][c + 2] = s[r][c];
                m.entries[r + 2][c] = s[r][c];
            }
        }
        m.label = Some(BasisElement::Alpha(i));
        m
    }

    /// Σ_k = diag(σ_k, σ_k).
    pub fn sigma_big(k: Axis) -> Self {
        let s = pauli(k);
        let mut m = Self::zero();
        for r in 0..2 {
            for c in 0..2 {
                m.entries[r][c] = s[r][c];
                m.entries[r + 2][c + 2] = s[r][c];
            }
        }
        m.label = Some(BasisElement::Sigma(k));
        m
    }

    /// γ⁵ = iγ⁰γ¹γ²γ³.
    pub fn gamma5() -> Self {
        let g0 = Self::gamma0();
        let p = g0
            .mul(&Self::gamma(Axis::X))
            .mul(&Self::gamma(Axis::Y))
            .mul(&Self::gamma(Axis::Z));
        let mut m = p.scale(GaussInt::I);
        m.label = Some(BasisElement::Gamma5);
        m
    }

    /// Named generator accessor.
    pub fn basis(g: Generator) -> Self {
        match g {
            Generator::Identity => Self::identity(),
            Generator::Gamma0 => Self::gamma0(),
            Generator::Gamma(i) => Self::gamma(i),
            Generator::Alpha(i) => Self::alpha(i),
            Generator::SigmaBig(k) => Self::sigma_big(k),
            Generator::Pauli(k) => {
                let mut m = Self::sigma_big(k);
                m.label = Some(BasisElement::Sigma(k));
                m
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.entries[r][c] = self.entries[r][c] + o.entries[r][c];
            }
        }
        m
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.entries[r][c] = self.entries[r][c] - o.entries[r][c];
            }
        }
        m
    }

    pub fn scale(&self, s: GaussInt) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.entries[r][c] = self.entries[r][c] * s;
            }
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = GaussInt::ZERO;
                for k in 0..4 {
                    acc = acc + self.entries[r][k] * o.entries[k][c];
                }
                m.entries[r][c] = acc;
            }
        }
        m
    }

    /// [a, b] = ab − ba.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// {a, b} = ab + ba.
    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                m.entries[r][c] = self.entries[c][r].conj();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.adjoint() == self.scale(-GaussInt::ONE)
    }
}

/// Result of multiplying two basis elements: a unit phase times a third
/// basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaggedProduct {
    pub phase: GaussInt,
    pub element: BasisElement,
}

/// Exact multiplication table over the sixteen basis elements.
///
/// Built once from the matrices themselves; every product of two basis
/// elements is a unit phase {±1, ±i} times a basis element.
pub struct BasisTable {
    table: [[TaggedProduct; 16]; 16],
}

impl BasisTable {
    pub fn new() -> Self {
        let all = BasisElement::all();
        let mats: Vec<CliffordElement> = all.iter().map(|b| b.matrix()).collect();
        let phases = [
            GaussInt::ONE,
            -GaussInt::ONE,
            GaussInt::I,
            -GaussInt::I,
        ];
        let fill = TaggedProduct { phase: GaussInt::ONE, element: BasisElement::Id };
        let mut table = [[fill; 16]; 16];
        for (ia, a) in all.iter().enumerate() {
            for (ib, b) in all.iter().enumerate() {
                let prod = mats[ia].mul(&mats[ib]);
                let mut found = None;
                'search: for (ic, c) in mats.iter().enumerate() {
                    for &ph in &phases {
                        if prod == c.scale(ph) {
                            found = Some(TaggedProduct { phase: ph, element: all[ic] });
                            break 'search;
                        }
                    }
                }
                table[a.ordinal()][b.ordinal()] =
                    found.expect("basis product must close on the sixteen elements");
            }
        }
        Self { table }
    }

    pub fn product(&self, a: BasisElement, b: BasisElement) -> TaggedProduct {
        self.table[a.ordinal()][b.ordinal()]
    }
}

impl Default for BasisTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Outcome of the identity suite: failures are reported, not thrown.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub pass: bool,
    pub failures: Vec<String>,
    pub checks_run: usize,
}

/// Runs the identity suite on a supplied set of generators, so a corrupted
/// representation can be fed in as a negative control.
pub fn verify_identity_suite_on(
    gamma0: &CliffordElement,
    gammas: &[CliffordElement; 3],
) -> IdentityReport {
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut check = |name: String, ok: bool, failures: &mut Vec<String>| {
        checks += 1;
        if !ok {
            failures.push(name);
        }
    };

    let id = CliffordElement::identity();
    let alphas: Vec<CliffordElement> =
        gammas.iter().map(|g| gamma0.mul(g)).collect();
    let sigmas: Vec<CliffordElement> =
        Axis::ALL.iter().map(|&k| CliffordElement::sigma_big(k)).collect();

    check("gamma0 hermitian".into(), gamma0.is_hermitian(), &mut failures);
    check("gamma0^2 = 1".into(), gamma0.mul(gamma0) == id, &mut failures);
    for (i, g) in gammas.iter().enumerate() {
        check(format!("gamma{} anti-hermitian", i + 1), g.is_anti_hermitian(), &mut failures);
        check(
            format!("gamma{}^2 = -1", i + 1),
            g.mul(g) == id.scale(-GaussInt::ONE),
            &mut failures,
        );
    }
    for (i, a) in alphas.iter().enumerate() {
        check(format!("alpha{} hermitian", i + 1), a.is_hermitian(), &mut failures);
        check(format!("alpha{}^2 = 1", i + 1), a.mul(a) == id, &mut failures);
    }
    for (k, s) in sigmas.iter().enumerate() {
        check(format!("Sigma{} hermitian", k + 1), s.is_hermitian(), &mut failures);
        check(format!("Sigma{}^2 = 1", k + 1), s.mul(s) == id, &mut failures);
    }

    // Entry values of the generators stay in {0, ±1, ±i}.
    for (name, m) in [("gamma0", gamma0.clone())]
        .into_iter()
        .chain(gammas.iter().enumerate().map(|(i, g)| {
            (["gamma1", "gamma2", "gamma3"][i], g.clone())
        }))
    {
        let ok = m.entries.iter().flatten().all(|e| {
            (e.re == 0 || e.im == 0) && e.re.abs() <= 1 && e.im.abs() <= 1
        });
        check(format!("{name} entries in {{0, ±1, ±i}}"), ok, &mut failures);
    }

    // {α^i, α^j} = −2η^{ij} = +2δ^{ij}.
    for (i, ai) in alphas.iter().enumerate() {
        for (j, aj) in alphas.iter().enumerate() {
            let lhs = ai.anticommutator(aj);
            let eta = eta_spatial(Axis::ALL[i], Axis::ALL[j]);
            let rhs = id.scale(GaussInt::new(-2 * eta, 0));
            check(format!("{{a{},a{}}} = -2 eta", i + 1, j + 1), lhs == rhs, &mut failures);
        }
    }

    // α^iα^j = −η^{ij} + iε^{ijk}Σ_k (note the explicit i in front of the
    // Levi-Civita part; the product of two distinct alphas is i times a
    // spin matrix, e.g. α¹α² = iΣ₃).
    for (i, ai) in alphas.iter().enumerate() {
        for (j, aj) in alphas.iter().enumerate() {
            let lhs = ai.mul(aj);
            let mut rhs =
                id.scale(GaussInt::new(-eta_spatial(Axis::ALL[i], Axis::ALL[j]), 0));
            for (k, s) in sigmas.iter().enumerate() {
                let e = epsilon(Axis::ALL[i], Axis::ALL[j], Axis::ALL[k]);
                if e != 0 {
                    rhs = rhs.add(&s.scale(GaussInt::new(0, e)));
                }
            }
            check(
                format!("a{}a{} = -eta + i eps Sigma", i + 1, j + 1),
                lhs == rhs,
                &mut failures,
            );
        }
    }

    // For any odd O (a ℤ[i] combination of the alphas): {γ⁰, O} = 0,
    // [γ⁰O, γ⁰] = −2O and [γ⁰O, O] = 2γ⁰O².
    let combos: [[GaussInt; 3]; 3] = [
        [GaussInt::ONE, GaussInt::ZERO, GaussInt::ZERO],
        [GaussInt::new(1, 0), GaussInt::new(0, 1), GaussInt::new(2, 0)],
        [GaussInt::new(-1, 2), GaussInt::new(3, 0), GaussInt::new(0, -1)],
    ];
    for (n, combo) in combos.iter().enumerate() {
        let mut odd = CliffordElement::zero();
        for (a, &coef) in alphas.iter().zip(combo.iter()) {
            odd = odd.add(&a.scale(coef));
        }
        check(
            format!("{{gamma0, O_{n}}} = 0"),
            gamma0.anticommutator(&odd).is_zero(),
            &mut failures,
        );
        let g0o = gamma0.mul(&odd);
        check(
            format!("[gamma0 O_{n}, gamma0] = -2 O"),
            g0o.commutator(gamma0) == odd.scale(GaussInt::new(-2, 0)),
            &mut failures,
        );
        check(
            format!("[gamma0 O_{n}, O] = 2 gamma0 O^2"),
            g0o.commutator(&odd) == gamma0.mul(&odd).mul(&odd).scale(GaussInt::new(2, 0)),
            &mut failures,
        );
    }

    // Signature bookkeeping.
    check(
        "eta^{ij} = -delta^{ij}".into(),
        Axis::ALL
            .iter()
            .flat_map(|&i| Axis::ALL.iter().map(move |&j| (i, j)))
            .all(|(i, j)| eta_spatial(i, j) == if i == j { -1 } else { 0 }),
        &mut failures,
    );

    IdentityReport { pass: failures.is_empty(), failures, checks_run: checks }
}

/// Runs the identity suite on the shipped Pauli representation.
pub fn verify_identity_suite() -> IdentityReport {
    verify_identity_suite_on(
        &CliffordElement::gamma0(),
        &[
            CliffordElement::gamma(Axis::X),
            CliffordElement::gamma(Axis::Y),
            CliffordElement::gamma(Axis::Z),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma0_is_diag_1_1_m1_m1() {
        let g = CliffordElement::basis(Generator::Gamma0);
        let d: Vec<i64> = (0..4).map(|k| g.entries[k][k].re).collect();
        assert_eq!(d, vec![1, 1, -1, -1]);
        for r in 0..4 {
            for c in 0..4 {
                if r != c {
                    assert!(g.entries[r][c].is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_generator_is_identity() {
        assert_eq!(CliffordElement::basis(Generator::Identity), CliffordElement::identity());
    }

    #[test]
    fn alpha1_has_sigma1_blocks() {
        let a = CliffordElement::basis(Generator::Alpha(Axis::X));
        let s = pauli(Axis::X);
        for r in 0..2 {
            for c in 0..2 {
                assert!(a.entries[r][c].is_zero());
                assert!(a.entries[r + 2][c + 2].is_zero());
                assert_eq!(a.entries[r][c + 2], s[r][c]);
                assert_eq!(a.entries[r + 2][c], s[r][c]);
            }
        }
    }

    #[test]
    fn invalid_axis_rejected() {
        assert!(Axis::new(0).is_err());
        assert!(Axis::new(4).is_err());
    }

    #[test]
    fn self_commutator_vanishes() {
        let g = CliffordElement::gamma0();
        assert!(g.commutator(&g).is_zero());
    }

    #[test]
    fn gamma0_anticommutes_with_alpha() {
        let g0 = CliffordElement::gamma0();
        let a1 = CliffordElement::alpha(Axis::X);
        assert!(g0.anticommutator(&a1).is_zero());
    }

    #[test]
    fn alpha_product_gives_i_sigma() {
        // α¹α² = iΣ₃, the ε^{12k}Σ_k component of α^iα^j = −η^{ij} + iε^{ijk}Σ_k.
        let lhs = CliffordElement::alpha(Axis::X).mul(&CliffordElement::alpha(Axis::Y));
        let rhs = CliffordElement::sigma_big(Axis::Z).scale(GaussInt::I);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn alpha_anticommutator_diagonal() {
        // {α², α²} = −2η^{22} = +2·1.
        let a2 = CliffordElement::alpha(Axis::Y);
        let lhs = a2.anticommutator(&a2);
        assert_eq!(lhs, CliffordElement::identity().scale(GaussInt::new(2, 0)));
    }

    #[test]
    fn suite_passes_on_shipped_representation() {
        let rep = verify_identity_suite();
        assert!(rep.pass, "failures: {:?}", rep.failures);
        assert!(rep.checks_run > 30);
    }

    #[test]
    fn suite_flags_corrupted_gamma1() {
        let mut g1 = CliffordElement::gamma(Axis::X);
        g1.entries[0][2] = GaussInt::new(2, 0); // corrupt one entry
        let rep = verify_identity_suite_on(
            &CliffordElement::gamma0(),
            &[g1, CliffordElement::gamma(Axis::Y), CliffordElement::gamma(Axis::Z)],
        );
        assert!(!rep.pass);
        assert!(!rep.failures.is_empty());
    }

    #[test]
    fn basis_table_closes_with_unit_phases() {
        let table = BasisTable::new();
        // Every product must reproduce the matrix product exactly.
        for a in BasisElement::all() {
            for b in BasisElement::all() {
                let p = table.product(a, b);
                let lhs = a.matrix().mul(&b.matrix());
                let rhs = p.element.matrix().scale(p.phase);
                assert_eq!(lhs, rhs, "{a} * {b}");
            }
        }
    }

    #[test]
    fn evenness_matches_gamma0_commutation() {
        let g0 = CliffordElement::gamma0();
        for b in BasisElement::all() {
            let m = b.matrix();
            if b.is_even() {
                assert!(g0.commutator(&m).is_zero(), "{b} should commute");
            } else {
                assert!(g0.anticommutator(&m).is_zero(), "{b} should anticommute");
            }
        }
    }

    #[test]
    fn adjoint_signs_match_matrices() {
        for b in BasisElement::all() {
            let m = b.matrix();
            assert_eq!(
                m.adjoint(),
                m.scale(GaussInt::new(b.adjoint_sign(), 0)),
                "{b}"
            );
        }
    }
}
