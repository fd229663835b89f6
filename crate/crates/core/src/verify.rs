//! Checks on a constructed octic and pencil: dimensions, residual scheme,
//! nodes and genus, resolution shape, simple branching, recovery of `R`,
//! and the dimension count of the parameter spaces.
//!
//! Every check has a measuring function that always produces a report and a
//! judging step that turns the report into a verdict. Reports are plain data
//! so a stored verification can be recomputed and compared field by field.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::groebner::{quotient_zerodim, GroebnerBasis, IdealBasis, QuotientAlgebra, Reducedness};
use crate::linsys::{
    generator_syzygy_profile, linear_system, points_ideal, FatPointSystem, Point, ResolutionProfile,
};
use crate::matrix::DenseMatrix;
use crate::pipeline::{
    disjoint_from, verification_rng, Construction, ConstructionConstants, Pencil,
};
use crate::poly::{BinaryForm, Ring, SparsePoly, UniPoly};

/// Pencil basis changes `f1 -> f1 + c·f2` tried when `f1` is not a unit on
/// the ramification scheme.
pub const MAX_BASIS_SHIFT: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct NodeEntry {
    /// The node in working coordinates.
    pub point: [u32; 3],
    /// `b^2 - 4ac` of the quadratic part `a u^2 + b uv + c v^2`.
    pub discriminant: u32,
    pub ordinary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct NodeReport {
    /// Length of the singular scheme in the chart; `None` if it is not
    /// finite.
    pub singular_degree: Option<usize>,
    /// The singular scheme equals the reduced scheme of the given points.
    pub support_matches: bool,
    pub singular_at_infinity: bool,
    pub nodes: Vec<NodeEntry>,
}

impl NodeReport {
    pub fn judge(&self) -> Result<()> {
        // a non-ordinary singularity also makes the singular scheme too
        // long; report the more specific defect
        if let Some(index) = self.nodes.iter().position(|e| !e.ordinary) {
            return Err(Error::NonOrdinaryNode { index });
        }
        let n = self.nodes.len();
        if self.singular_degree != Some(n) || !self.support_matches || self.singular_at_infinity {
            return Err(Error::ExtraSingularity(match self.singular_degree {
                _ if self.singular_at_infinity => "singular point on z = 0".to_string(),
                Some(d) if d != n => format!("singular scheme of degree {d}, expected {n}"),
                Some(_) => "singular scheme differs from the node set".to_string(),
                None => "singular locus is not finite".to_string(),
            }));
        }
        Ok(())
    }
}

/// `b^2 - 4ac` for the quadratic part of `g` (chart polynomial) at `(a, b)`.
fn node_discriminant(g: &SparsePoly, at: &[FieldElement]) -> FieldElement {
    let f = g.field();
    let gx = g.partial_derivative(0);
    let gxx = gx.partial_derivative(0).evaluate(at);
    let gxy = gx.partial_derivative(1).evaluate(at);
    let gyy = g.partial_derivative(1).partial_derivative(1).evaluate(at);
    f.sub(f.mul(gxy, gxy), f.mul(gxx, gyy))
}

/// Whether the three partials of a plane form have a common zero on
/// `z = 0`.
fn singular_on_line_at_infinity(g: &SparsePoly) -> bool {
    let f = g.field();
    let d = match g.total_degree() {
        Some(d) if d >= 1 => d - 1,
        _ => return false,
    };
    let partials: Vec<SparsePoly> = (0..3).map(|v| g.partial_derivative(v)).collect();
    // restriction to z = 0 as a polynomial in t = x / y
    let restrict = |h: &SparsePoly| {
        let mut c = vec![FieldElement::ZERO; d as usize + 1];
        for (m, a) in h.terms() {
            if m.exp(2) == 0 {
                c[m.exp(0) as usize] = *a;
            }
        }
        UniPoly::new(f, c)
    };
    let forms: Vec<UniPoly> = partials.iter().map(restrict).collect();
    // the point (1 : 0 : 0) is a root iff every top coefficient vanishes
    let top = forms.iter().all(|u| u.degree() != Some(d as usize));
    let common = forms
        .iter()
        .skip(1)
        .fold(forms[0].clone(), |acc, u| acc.gcd(u));
    top || common.is_zero() || common.degree().is_some_and(|k| k > 0)
}

/// Singular scheme and local shape of the plane curve `g = 0` at `p`.
pub fn node_report(g: &SparsePoly, p: &[Point]) -> NodeReport {
    let f = g.field();
    let chart = Ring::chart(f);
    let gc = g.dehomogenize(2, chart);
    let jac = IdealBasis::new(
        chart,
        vec![
            gc.clone(),
            gc.partial_derivative(0),
            gc.partial_derivative(1),
        ],
    );
    let jgb = jac.groebner();
    let singular_degree = crate::groebner::standard_monomials(&jgb)
        .ok()
        .map(|s| s.len());
    let support_matches = match points_ideal(f, p) {
        Ok(ip) => ip.is_contained_in(&jgb) && jac.is_contained_in(&ip.groebner()),
        Err(_) => false,
    };
    let nodes = p
        .iter()
        .map(|q| {
            let disc = node_discriminant(&gc, &q[..2]);
            NodeEntry {
                point: q.map(|c| c.value()),
                discriminant: disc.value(),
                ordinary: !disc.is_zero(),
            }
        })
        .collect();
    NodeReport {
        singular_degree,
        support_matches,
        singular_at_infinity: singular_on_line_at_infinity(g),
        nodes,
    }
}

/// The singularities of `g` are exactly ordinary nodes at `p`.
pub fn verify_nodes(g: &SparsePoly, p: &[Point]) -> Result<NodeReport> {
    let r = node_report(g, p);
    r.judge()?;
    Ok(r)
}

/// Geometric genus of a plane curve of the given degree whose only
/// singularities are the reported ordinary nodes.
pub fn genus_check(report: &NodeReport, curve_degree: u32) -> i64 {
    let d = curve_degree as i64;
    (d - 1) * (d - 2) / 2 - report.nodes.len() as i64
}

/// Dimension of the adjoint forms of degree `d - 3` through the nodes.
pub fn adjoint_dimension(field: PrimeField, p: &[Point], curve_degree: u16) -> Result<usize> {
    Ok(linear_system(&FatPointSystem::simple(field, p)?, curve_degree - 3, None).dimension())
}

/// Resolution shape of the ideal of the node set, compared with that of
/// twelve general points.
pub fn irreducibility_evidence(field: PrimeField, p: &[Point]) -> Result<ResolutionProfile> {
    let profile = generator_syzygy_profile(&FatPointSystem::simple(field, p)?, 8);
    if !profile.matches_twelve_general_points() {
        return Err(Error::ProfileMismatch(format!(
            "generators {:?}, syzygies {:?}",
            profile.generators, profile.syzygies
        )));
    }
    Ok(profile)
}

/// `h = det(∇f1, ∇f2, ∇g)`. At a smooth point of `g = 0` that is not a
/// base point, `h` vanishes exactly when `f1 ∇f2 - f2 ∇f1` is proportional
/// to `∇g`, i.e. when `f2 / f1` restricted to the curve is ramified (Euler's
/// relation with `p ∤ deg f`).
pub fn ramification_form(g: &SparsePoly, f1: &SparsePoly, f2: &SparsePoly) -> SparsePoly {
    let grad =
        |h: &SparsePoly| -> Vec<SparsePoly> { (0..3).map(|v| h.partial_derivative(v)).collect() };
    let (a, b, c) = (grad(f1), grad(f2), grad(g));
    let minor = |i: usize, j: usize| b[i].mul(&c[j]).sub(&b[j].mul(&c[i]));
    a[0].mul(&minor(1, 2))
        .sub(&a[1].mul(&minor(0, 2)))
        .add(&a[2].mul(&minor(0, 1)))
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RamificationReport {
    /// Length of `(g, h)` in the chart.
    pub total_degree: Option<usize>,
    /// Length after removing the base points of the pencil on the curve.
    pub degree: Option<usize>,
    pub reduced: Option<Reducedness>,
    /// `c` such that the branch form is taken for the basis
    /// `(f1 + c·f2, f2)`.
    pub basis_shift: Option<u32>,
    /// Coefficients of the branch form, `t0^i t1^(w-i)` at index `i`.
    pub branch_form: Vec<u32>,
    pub squarefree: bool,
    /// The elimination route gives the same branch form up to a scalar.
    pub elimination_agrees: Option<bool>,
}

impl RamificationReport {
    pub fn judge(&self, expected: usize) -> Result<()> {
        if self.degree != Some(expected) {
            return Err(Error::WrongRamificationDegree {
                expected,
                found: self.degree.unwrap_or(0),
            });
        }
        if self.reduced == Some(Reducedness::NotReduced) {
            return Err(Error::NonReducedRamification(
                "nilpotent in the ramification algebra".into(),
            ));
        }
        if self.basis_shift.is_none() {
            return Err(Error::UnitFailure);
        }
        if !self.squarefree {
            return Err(Error::BranchCollision);
        }
        Ok(())
    }

    pub fn branch_binary_form(&self, field: PrimeField) -> BinaryForm {
        let coeffs = self
            .branch_form
            .iter()
            .map(|&c| field.elem(c as u64))
            .collect();
        BinaryForm::new(field, self.branch_form.len().saturating_sub(1), coeffs)
    }
}

/// Branch form of the pencil `(f1, f2)` on a finite ramification algebra:
/// the characteristic polynomial of multiplication by `f2 / f1`. `None` if
/// `f1` is not a unit.
pub fn branch_form(alg: &QuotientAlgebra, f1: &SparsePoly, f2: &SparsePoly) -> Option<BinaryForm> {
    let inv = alg.multiplication_operator(f1).inverse()?;
    let cp = inv.mul(&alg.multiplication_operator(f2)).charpoly();
    Some(BinaryForm::from_unipoly(&cp, alg.dim()).expect("charpoly has degree dim"))
}

/// The branch form by elimination of the curve coordinates: the binary form
/// `M` of least degree with `M(f2, f1)` in the ideal of the algebra, found
/// as the first linear dependence among the classes of `f2^i f1^(d-i)`. It
/// agrees with [`branch_form`] exactly when that form is squarefree.
pub fn branch_eliminant(
    alg: &QuotientAlgebra,
    f1: &SparsePoly,
    f2: &SparsePoly,
) -> Option<BinaryForm> {
    let gb = alg.groebner();
    let field = alg.ring().field;
    let (a, b) = (gb.normal_form(f1), gb.normal_form(f2));
    let mut prev = vec![gb.normal_form(&SparsePoly::one(alg.ring()))];
    for d in 1..=alg.dim() {
        let mut cur: Vec<SparsePoly> = prev.iter().map(|p| gb.normal_form(&p.mul(&a))).collect();
        cur.push(gb.normal_form(&prev[d - 1].mul(&b)));
        let cols: Vec<Vec<FieldElement>> = cur.iter().map(|p| alg.coords(p)).collect();
        let (rank, kernel) = DenseMatrix::from_columns(field, alg.dim(), &cols).rank_and_kernel();
        if rank <= d {
            return Some(BinaryForm::new(field, d, kernel[0].clone()));
        }
        prev = cur;
    }
    None
}

fn proportional(a: &BinaryForm, b: &BinaryForm) -> bool {
    let f = a.field();
    let Some(i) = a.coeffs().iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if a.degree() != b.degree() || b.coeffs()[i].is_zero() {
        return false;
    }
    let Ok(r) = f.div(b.coeffs()[i], a.coeffs()[i]) else {
        return false;
    };
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .all(|(&x, &y)| f.mul(x, r) == y)
}

/// Ramification of the map `g = 0 -> P^1` given by the pencil, away from
/// the base scheme `base` (chart ideal).
pub fn ramification_report<R: Rng + ?Sized>(
    g: &SparsePoly,
    pencil: &Pencil,
    base: &IdealBasis,
    rng: &mut R,
) -> RamificationReport {
    let chart = base.ring();
    let h = ramification_form(g, &pencil.f1, &pencil.f2);
    let mut report = RamificationReport {
        total_degree: None,
        degree: None,
        reduced: None,
        basis_shift: None,
        branch_form: Vec::new(),
        squarefree: false,
        elimination_agrees: None,
    };
    let total = IdealBasis::new(
        chart,
        vec![g.dehomogenize(2, chart), h.dehomogenize(2, chart)],
    );
    let Ok(total_alg) = QuotientAlgebra::from_ideal(&total) else {
        return report;
    };
    report.total_degree = Some(total_alg.dim());
    let torsion = total_alg.torsion(base.gens());
    let ram = total_alg.extend_ideal(&torsion);
    let alg = QuotientAlgebra::new(ram).expect("quotient of a finite algebra is finite");
    report.degree = Some(alg.dim());
    report.reduced = Some(alg.reducedness(rng));
    let (f1, f2) = pencil.chart();
    for c in 0..=MAX_BASIS_SHIFT {
        let shifted = f1.add(&f2.scale(chart.field.elem(c as u64)));
        if let Some(b) = branch_form(&alg, &shifted, &f2) {
            report.basis_shift = Some(c);
            report.squarefree = b.is_squarefree();
            report.branch_form = b.coeffs().iter().map(|c| c.value()).collect();
            report.elimination_agrees =
                Some(branch_eliminant(&alg, &shifted, &f2).is_some_and(|e| proportional(&e, &b)));
            break;
        }
    }
    report
}

/// Simple branching of the degree-8 cover: 32 reduced ramification points
/// over 32 distinct branch points.
pub fn ramification_analysis<R: Rng + ?Sized>(
    g: &SparsePoly,
    pencil: &Pencil,
    ideal_p: &IdealBasis,
    ideal_q: &IdealBasis,
    rng: &mut R,
) -> Result<RamificationReport> {
    let r = ramification_report(g, pencil, &ideal_p.product(ideal_q), rng);
    r.judge(ConstructionConstants::OCTIC.branch_points as usize)?;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RecoveryReport {
    /// `h^0(I_{P ∪ Q}(5))`.
    pub pencil_dimension: usize,
    /// The original pencil lies in the recomputed one.
    pub contains_pencil: bool,
    pub common_component: bool,
    pub base_degree: Option<usize>,
    pub base_reduced: Option<Reducedness>,
    /// `(f1', f2') : I_{P ∪ Q}` equals the ideal of `R`.
    pub recovered: bool,
}

impl RecoveryReport {
    pub fn judge(&self) -> Result<()> {
        let k = ConstructionConstants::OCTIC;
        if self.pencil_dimension != 2 {
            return Err(Error::WrongPencilDimension(self.pencil_dimension));
        }
        if self.common_component {
            return Err(Error::CommonComponent);
        }
        if self.base_degree != Some(k.bezout) {
            return Err(Error::BaseLocusDefect(format!(
                "base scheme of degree {:?}",
                self.base_degree
            )));
        }
        if self.base_reduced == Some(Reducedness::NotReduced) {
            return Err(Error::BaseLocusDefect("base scheme is not reduced".into()));
        }
        if !self.recovered || !self.contains_pencil {
            return Err(Error::RecoveryMismatch);
        }
        Ok(())
    }
}

/// Recomputes `R` from `(Γ, L, Q)`: the quintics through `P ∪ Q` form a
/// pencil whose residual base points are `R`.
pub fn recovery_report<R: Rng + ?Sized>(
    field: PrimeField,
    p: &[Point],
    ideal_q: &GroebnerBasis,
    pencil: &Pencil,
    r: &[Point],
    rng: &mut R,
) -> RecoveryReport {
    let chart = Ring::chart(field);
    let mut report = RecoveryReport {
        pencil_dimension: 0,
        contains_pencil: false,
        common_component: false,
        base_degree: None,
        base_reduced: None,
        recovered: false,
    };
    let Ok(simple) = FatPointSystem::simple(field, p) else {
        return report;
    };
    let sys = linear_system(&simple, 5, Some(ideal_q));
    report.pencil_dimension = sys.dimension();
    report.contains_pencil = sys.contains(&pencil.f1) && sys.contains(&pencil.f2);
    if sys.dimension() != 2 {
        return report;
    }
    let base = IdealBasis::new(
        chart,
        sys.basis.iter().map(|f| f.dehomogenize(2, chart)).collect(),
    );
    let Ok(alg) = QuotientAlgebra::from_ideal(&base) else {
        report.common_component = true;
        return report;
    };
    report.base_degree = Some(alg.dim());
    report.base_reduced = Some(alg.reducedness(rng));
    let (Ok(ip), Ok(ir)) = (points_ideal(field, p), points_ideal(field, r)) else {
        return report;
    };
    let ipq = ip.product(&IdealBasis::from_groebner(ideal_q));
    if let Ok(recovered) = quotient_zerodim(&base, &ipq) {
        report.recovered = IdealBasis::from_groebner(&recovered).equals(&ir);
    }
    report
}

pub fn recover_r<R: Rng + ?Sized>(
    field: PrimeField,
    p: &[Point],
    ideal_q: &GroebnerBasis,
    pencil: &Pencil,
    r: &[Point],
    rng: &mut R,
) -> Result<RecoveryReport> {
    let rep = recovery_report(field, p, ideal_q, pencil, r, rng);
    rep.judge()?;
    Ok(rep)
}

/// Dimension count of the spaces in the birationality argument, for plane
/// octics of genus `genus` with a pencil of degree 8.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DimensionAudit {
    pub genus: i64,
    pub cover_degree: i64,
    /// Brill-Noether number of the plane model, `ρ(g, d, 2)`.
    pub rho_net: i64,
    /// `ρ(g, d, 1) = dim W^1_d(C)`.
    pub rho_pencil: i64,
    pub nodes: i64,
    pub n_q: i64,
    pub n_r: i64,
    pub dim_x2: i64,
    pub dim_y2: i64,
    pub branch_points: i64,
    pub dim_severi: i64,
    /// `dim |ω_C ⊗ L^{-1}|`.
    pub dim_residual_series: i64,
}

pub fn rho(g: i64, d: i64, r: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

impl DimensionAudit {
    pub fn for_genus(genus: i64) -> Self {
        let d = 8;
        let nodes = (d - 1) * (d - 2) / 2 - genus;
        let n_q = 2 * genus - 2 - d;
        let n_r = 25 - nodes - n_q;
        let rho_pencil = rho(genus, d, 1);
        let dim_severi = 3 * d + genus - 1;
        let dim_residual_series = genus - d;
        DimensionAudit {
            genus,
            cover_degree: d,
            rho_net: rho(genus, d, 2),
            rho_pencil,
            nodes,
            n_q,
            n_r,
            dim_x2: 2 * (nodes + n_r) + 4,
            dim_y2: dim_severi + rho_pencil + dim_residual_series,
            branch_points: 2 * genus - 2 + 2 * d,
            dim_severi,
            dim_residual_series,
        }
    }

    /// Finitely many plane models, and the two parameter spaces have the
    /// same dimension.
    pub fn holds(&self) -> bool {
        self.rho_net == 0 && self.dim_x2 == self.dim_y2
    }

    pub fn render(&self) -> String {
        let (g, d) = (self.genus, self.cover_degree);
        let mut s = String::new();
        let mut line = |l: String| {
            s.push_str(&l);
            s.push('\n');
        };
        line(format!(
            "rho({g},{d},2) = {g} - 3*({g}-{d}+2) = {}",
            self.rho_net
        ));
        line(format!(
            "rho({g},{d},1) = {g} - 2*({g}-{d}+1) = {}",
            self.rho_pencil
        ));
        line(format!("nodes = 21 - {g} = {}", self.nodes));
        line(format!(
            "dim X2 = 2*({}+{}) + 4 = {}",
            self.nodes, self.n_r, self.dim_x2
        ));
        line(format!(
            "dim Y2 = {} + {} + {} = {}",
            self.dim_severi, self.rho_pencil, self.dim_residual_series, self.dim_y2
        ));
        line(format!("w = 2*{g} - 2 + 2*{d} = {}", self.branch_points));
        line(format!(
            "dim U({g},{d}) = 3*{d} + {g} - 1 = {}",
            self.dim_severi
        ));
        let rel = if self.dim_x2 == self.dim_y2 {
            "="
        } else {
            "!="
        };
        line(format!(
            "dim X2 {rel} dim Y2: {} {rel} {}",
            self.dim_x2, self.dim_y2
        ));
        line(format!(
            "audit: {}",
            if self.holds() { "ok" } else { "FAILED" }
        ));
        s
    }
}

pub fn dimension_audit() -> DimensionAudit {
    DimensionAudit::for_genus(ConstructionConstants::OCTIC.genus as i64)
}

/// Dimensions of the linear systems used by the construction.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Dimensions {
    /// `h^0(I_{P ∪ R}(5))`
    pub pr_quintics: usize,
    /// `h^0(I_P^2(8))`
    pub nodal_octics: usize,
    /// `h^0(I_P^2 ∩ I_Q(8))`
    pub nodal_octics_through_q: usize,
    /// `h^0(I_{P ∪ Q}(5))`
    pub pq_quintics: usize,
    /// `h^0(I_P(5))`
    pub adjoint_quintics: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SchemeCheck {
    pub degree: Option<usize>,
    pub reduced: Option<Reducedness>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ResidualCheck {
    pub degree: Option<usize>,
    pub reduced: Option<Reducedness>,
    pub disjoint: bool,
    /// The recorded `I_Q` equals `(f1, f2) : I_{P ∪ R}`.
    pub matches_recorded: bool,
}

/// Every measurement taken on one construction.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Verdicts {
    pub dimensions: Dimensions,
    pub pencil_in_system: bool,
    pub base: SchemeCheck,
    pub residual: ResidualCheck,
    pub octic_in_nodal_system: bool,
    pub octic_spans_system_through_q: bool,
    pub curve_meets_r: bool,
    pub nodes: NodeReport,
    pub genus: i64,
    pub profile: ResolutionProfile,
    pub ramification: RamificationReport,
    pub recovery: RecoveryReport,
    pub audit: DimensionAudit,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Success,
    Failed { stage: String, reason: String },
    Undecided { check: String },
}

impl Status {
    pub fn failed(stage: &str, reason: &str) -> Self {
        Status::Failed {
            stage: stage.to_string(),
            reason: reason.to_string(),
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Success => write!(f, "SUCCESS"),
            Status::Failed { stage, reason } => write!(f, "FAILED at {stage}: {reason}"),
            Status::Undecided { check } => write!(f, "UNDECIDED ({check})"),
        }
    }
}

fn expect(
    stage: &str,
    ok: bool,
    reason: impl FnOnce() -> String,
) -> std::result::Result<(), Status> {
    if ok {
        Ok(())
    } else {
        Err(Status::failed(stage, &reason()))
    }
}

fn judged(stage: &str, r: Result<()>) -> std::result::Result<(), Status> {
    r.map_err(|e| Status::failed(stage, &e.to_string()))
}

impl Verdicts {
    /// SUCCESS when every open condition holds; the first failed check
    /// otherwise; UNDECIDED when all hold except an inconclusive
    /// reducedness test.
    pub fn status(&self) -> Status {
        match self.first_failure() {
            Err(s) => s,
            Ok(()) => {
                let undecided = [
                    ("base_reduced", self.base.reduced),
                    ("residual_reduced", self.residual.reduced),
                    ("ramification_reduced", self.ramification.reduced),
                    ("recovery_base_reduced", self.recovery.base_reduced),
                ]
                .into_iter()
                .find(|(_, r)| *r == Some(Reducedness::Undecided));
                let undecided = undecided.map(|(check, _)| check).or((self
                    .ramification
                    .elimination_agrees
                    == Some(false))
                .then_some("branch_form_routes"));
                match undecided {
                    Some(check) => Status::Undecided {
                        check: check.to_string(),
                    },
                    None => Status::Success,
                }
            }
        }
    }

    fn first_failure(&self) -> std::result::Result<(), Status> {
        let k = ConstructionConstants::OCTIC;
        let d = &self.dimensions;
        expect("choose_points", d.pr_quintics == 4, || {
            format!("h0(I_PR(5)) = {}", d.pr_quintics)
        })?;
        expect("choose_points", d.nodal_octics == 9, || {
            format!("h0(I_P^2(8)) = {}", d.nodal_octics)
        })?;
        expect("choose_pencil", self.pencil_in_system, || {
            "pencil not in H0(I_PR(5))".into()
        })?;
        expect(
            "residual_points",
            self.base.degree == Some(k.bezout),
            || format!("base scheme degree {:?}", self.base.degree),
        )?;
        expect(
            "residual_points",
            self.base.reduced != Some(Reducedness::NotReduced),
            || "base scheme not reduced".into(),
        )?;
        let q = &self.residual;
        expect("residual_points", q.degree == Some(k.n_q), || {
            format!("residual degree {:?}", q.degree)
        })?;
        expect(
            "residual_points",
            q.reduced != Some(Reducedness::NotReduced),
            || "Q not reduced".into(),
        )?;
        expect("residual_points", q.disjoint, || "Q meets P ∪ R".into())?;
        expect("residual_points", q.matches_recorded, || {
            "recorded I_Q differs from the residual".into()
        })?;
        expect("octic", d.nodal_octics_through_q == 1, || {
            format!("h0(I_P^2 ∩ I_Q(8)) = {}", d.nodal_octics_through_q)
        })?;
        expect(
            "octic",
            self.octic_in_nodal_system && self.octic_spans_system_through_q,
            || "octic does not span the nodal system through Q".into(),
        )?;
        expect("disjointness", !self.curve_meets_r, || {
            Error::CurveMeetsR.to_string()
        })?;
        judged("verify_nodes", self.nodes.judge())?;
        expect(
            "genus_check",
            self.genus == k.genus as i64 && d.adjoint_quintics == k.genus as usize,
            || {
                format!(
                    "genus {} with {} adjoint quintics",
                    self.genus, d.adjoint_quintics
                )
            },
        )?;
        expect(
            "irreducibility",
            self.profile.matches_twelve_general_points(),
            || {
                format!(
                    "profile {:?} / {:?}",
                    self.profile.generators, self.profile.syzygies
                )
            },
        )?;
        judged(
            "ramification",
            self.ramification.judge(k.branch_points as usize),
        )?;
        judged("recover_r", self.recovery.judge())?;
        expect("audit", self.audit.holds(), || {
            "dimension audit fails".into()
        })?;
        Ok(())
    }
}

/// Runs every check on a construction. The reducedness witnesses draw from
/// [`verification_rng`] so the result depends only on the data and the
/// seed.
pub fn verify_construction(c: &Construction, seed: u64) -> Verdicts {
    let mut rng = verification_rng(seed);
    let field = c.field;
    let chart = Ring::chart(field);
    let k = ConstructionConstants::OCTIC;
    let all: Vec<Point> = c.p.iter().chain(&c.r).copied().collect();

    let pr = FatPointSystem::simple(field, &all);
    let quintics = pr.as_ref().map(|s| linear_system(s, 5, None)).ok();
    let double = FatPointSystem::double(field, &c.p).ok();
    let nodal = double.as_ref().map(|s| linear_system(s, 8, None));
    let nodal_q = double
        .as_ref()
        .map(|s| linear_system(s, 8, Some(&c.ideal_q)));
    let pencil_in_system = quintics.as_ref().is_some_and(|q| {
        q.contains(&c.pencil.f1)
            && q.contains(&c.pencil.f2)
            && Pencil::from_coefficients(
                q,
                [
                    &coefficients_in(q, &c.pencil.f1).unwrap_or_default(),
                    &coefficients_in(q, &c.pencil.f2).unwrap_or_default(),
                ],
            )
            .is_some()
    });

    let (f1, f2) = c.pencil.chart();
    let base_ideal = IdealBasis::new(chart, vec![f1, f2]);
    let base_alg = QuotientAlgebra::from_ideal(&base_ideal).ok();
    let base = SchemeCheck {
        degree: base_alg.as_ref().map(|a| a.dim()),
        reduced: base_alg.as_ref().map(|a| a.reducedness(&mut rng)),
    };

    let ideal_pr = points_ideal(field, &all).ok();
    let residual_gb = match (&base_alg, &ideal_pr) {
        (Some(_), Some(ipr)) => quotient_zerodim(&base_ideal, ipr).ok(),
        _ => None,
    };
    let residual_alg = residual_gb
        .clone()
        .and_then(|q| QuotientAlgebra::new(q).ok());
    let recorded_q = IdealBasis::from_groebner(&c.ideal_q);
    let residual = ResidualCheck {
        degree: residual_alg.as_ref().map(|a| a.dim()),
        reduced: residual_alg.as_ref().map(|a| a.reducedness(&mut rng)),
        disjoint: disjoint_from(&c.ideal_q, &all),
        matches_recorded: residual_gb
            .as_ref()
            .is_some_and(|q| IdealBasis::from_groebner(q).equals(&recorded_q)),
    };

    let nodes = node_report(&c.octic, &c.p);
    let genus = genus_check(&nodes, k.curve_degree);
    let profile = generator_syzygy_profile(
        &FatPointSystem::simple(field, &c.p).expect("distinct points"),
        8,
    );
    let adjoint_quintics = adjoint_dimension(field, &c.p, k.curve_degree as u16).unwrap_or(0);

    let ideal_p = points_ideal(field, &c.p).unwrap_or_else(|_| IdealBasis::unit(chart));
    let ramification =
        ramification_report(&c.octic, &c.pencil, &ideal_p.product(&recorded_q), &mut rng);
    let recovery = recovery_report(field, &c.p, &c.ideal_q, &c.pencil, &c.r, &mut rng);

    Verdicts {
        dimensions: Dimensions {
            pr_quintics: quintics.as_ref().map_or(0, |q| q.dimension()),
            nodal_octics: nodal.as_ref().map_or(0, |s| s.dimension()),
            nodal_octics_through_q: nodal_q.as_ref().map_or(0, |s| s.dimension()),
            pq_quintics: recovery.pencil_dimension,
            adjoint_quintics,
        },
        pencil_in_system,
        base,
        residual,
        octic_in_nodal_system: nodal.as_ref().is_some_and(|s| s.contains(&c.octic)),
        octic_spans_system_through_q: nodal_q
            .as_ref()
            .is_some_and(|s| s.dimension() == 1 && s.contains(&c.octic)),
        curve_meets_r: c.r.iter().any(|q| c.octic.evaluate(q).is_zero()),
        nodes,
        genus,
        profile,
        ramification,
        recovery,
        audit: dimension_audit(),
    }
}

/// Coordinates of `f` on the basis of `system`, if it lies in the span.
fn coefficients_in(
    system: &crate::linsys::LinearSystem,
    f: &SparsePoly,
) -> Option<Vec<FieldElement>> {
    let field = f.field();
    let mons = crate::poly::monomial_basis(system.degree);
    let cols: Vec<Vec<FieldElement>> = system.basis.iter().map(|b| b.coords(&mons)).collect();
    let m = DenseMatrix::from_columns(field, mons.len(), &cols);
    m.solve(&f.coords(&mons))
}
