//! Term structure of the operator algebra.
//!
//! A term is
//!
//! ```text
//! coeff · ħ^a c^b m^d e^f · (field symbols with derivative multi-indices)
//!       · (ordered covariant-derivative slots D_i) · (Clifford basis tag)
//! ```
//!
//! Index conventions: everything is stored with lowered Cartesian spatial
//! indices. Raised indices in source expressions are converted on entry via
//! η^{ij} = −δ^{ij} (so ∂^i → −∂_i, A^i → −A_i, h₀^i → −h₀ᵢ), except that a
//! covariant slot (∂^i − ieA^i/ħc) flips as a unit to −D_i. The field
//! strength is F_ij = ∂_iA_j − ∂_jA_i with B_k = ½ε_{kij}F_ij, which is what
//! makes [D_i, D_j] = −(ie/ħc)F_ij and the Zeeman term come out with the
//! usual Pauli sign.

use crate::clifford::{Axis, BasisElement};
use std::fmt;

/// Kind of commuting field symbol. `Hij` is canonicalized to i ≤ j (the
/// perturbation is symmetric); `Fij` to i < j with a sign flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    H00,
    H0i(Axis),
    Hij(Axis, Axis),
    TrH,
    A0,
    Ai(Axis),
    Fij(Axis, Axis),
}

impl FieldKind {
    pub fn is_metric(self) -> bool {
        matches!(self, FieldKind::H00 | FieldKind::H0i(_) | FieldKind::Hij(_, _) | FieldKind::TrH)
    }

    pub fn is_em(self) -> bool {
        !self.is_metric()
    }

    /// Velocity-order carried by the bare symbol. The assignments reproduce
    /// the displayed orders of every term group: A₀ pairs with ħ∂_t (order
    /// 2), A_i pairs with ħc∂_i inside a covariant slot (order 1), F = ∂A
    /// (order 2), while the metric components are order-0 bookkeeping.
    pub fn base_grade(self) -> u32 {
        match self {
            FieldKind::A0 => 2,
            FieldKind::Ai(_) => 1,
            FieldKind::Fij(_, _) => 2,
            _ => 0,
        }
    }
}

/// A field symbol with its derivative multi-index (∂_t count, ∂_i counts).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSymbol {
    pub kind: FieldKind,
    pub dt: u8,
    pub dx: [u8; 3],
}

impl FieldSymbol {
    pub fn new(kind: FieldKind) -> Self {
        Self { kind, dt: 0, dx: [0; 3] }
    }

    pub fn h00() -> Self {
        Self::new(FieldKind::H00)
    }

    pub fn h0i(i: Axis) -> Self {
        Self::new(FieldKind::H0i(i))
    }

    /// Symmetric metric component, stored with i ≤ j.
    pub fn hij(i: Axis, j: Axis) -> Self {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        Self::new(FieldKind::Hij(a, b))
    }

    pub fn trh() -> Self {
        Self::new(FieldKind::TrH)
    }

    pub fn a0() -> Self {
        Self::new(FieldKind::A0)
    }

    pub fn ai(i: Axis) -> Self {
        Self::new(FieldKind::Ai(i))
    }

    /// Antisymmetric field strength; returns the sign of the canonical form
    /// (None for i = j, where F vanishes).
    pub fn fij(i: Axis, j: Axis) -> Option<(i64, Self)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => None,
            Less => Some((1, Self::new(FieldKind::Fij(i, j)))),
            Greater => Some((-1, Self::new(FieldKind::Fij(j, i)))),
        }
    }

    pub fn dx_total(&self) -> u32 {
        self.dx.iter().map(|&d| d as u32).sum()
    }

    /// Has any space or time derivative applied.
    pub fn has_deriv(&self) -> bool {
        self.dt > 0 || self.dx_total() > 0
    }

    pub fn with_dx(mut self, axis: Axis) -> Self {
        self.dx[axis.idx0()] += 1;
        self
    }

    pub fn with_dt(mut self) -> Self {
        self.dt += 1;
        self
    }

    /// Velocity-order contribution: base + 1 per spatial, 2 per time
    /// derivative.
    pub fn grade_v(&self) -> u32 {
        self.kind.base_grade() + self.dx_total() + 2 * self.dt as u32
    }
}

impl fmt::Display for FieldSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.dt {
            write!(f, "dt.")?;
        }
        for (k, &n) in self.dx.iter().enumerate() {
            for _ in 0..n {
                write!(f, "d{}.", k + 1)?;
            }
        }
        match self.kind {
            FieldKind::H00 => write!(f, "h00"),
            FieldKind::H0i(i) => write!(f, "h0{i}"),
            FieldKind::Hij(i, j) => write!(f, "h{i}{j}"),
            FieldKind::TrH => write!(f, "trh"),
            FieldKind::A0 => write!(f, "A0"),
            FieldKind::Ai(i) => write!(f, "A{i}"),
            FieldKind::Fij(i, j) => write!(f, "F{i}{j}"),
        }
    }
}

/// Integer exponents of the formal constants ħ, c, m, e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ConstPow {
    pub hbar: i16,
    pub c: i16,
    pub m: i16,
    pub e: i16,
}

impl ConstPow {
    pub fn new(hbar: i16, c: i16, m: i16, e: i16) -> Self {
        Self { hbar, c, m, e }
    }

    pub fn add(self, o: ConstPow) -> Self {
        Self {
            hbar: self.hbar + o.hbar,
            c: self.c + o.c,
            m: self.m + o.m,
            e: self.e + o.e,
        }
    }
}

impl fmt::Display for ConstPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (name, p) in [("hbar", self.hbar), ("c", self.c), ("m", self.m), ("e", self.e)] {
            if p != 0 {
                if any {
                    write!(f, " ")?;
                }
                if p == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{p}")?;
                }
                any = true;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Everything identifying a term except its scalar coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermKey {
    pub consts: ConstPow,
    pub fields: Vec<FieldSymbol>,
    pub derivs: Vec<Axis>,
    pub tag: BasisElement,
}

impl TermKey {
    pub fn grade_h(&self) -> u32 {
        self.fields.iter().filter(|s| s.kind.is_metric()).count() as u32
    }

    pub fn grade_v(&self) -> u32 {
        self.derivs.len() as u32 + self.fields.iter().map(|s| s.grade_v()).sum::<u32>()
    }

    pub fn has_em(&self) -> bool {
        self.fields.iter().any(|s| s.kind.is_em())
    }

    /// Any derivative acting on a metric component (the ∂h flag).
    pub fn has_metric_deriv(&self) -> bool {
        self.fields.iter().any(|s| s.kind.is_metric() && s.has_deriv())
    }
}

impl fmt::Display for TermKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.consts)?;
        for s in &self.fields {
            write!(f, " {s}")?;
        }
        for d in &self.derivs {
            write!(f, " D{d}")?;
        }
        write!(f, " [{}]", self.tag)
    }
}
