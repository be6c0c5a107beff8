//! Seeded invariant sweeps behind `rslice verify <suite>`.

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::classes::{class_dimension, classify, enumerate_classes};
use crate::error::{LieError, Result};
use crate::hamiltonian::{
    groupoid_axiom_suite, in_sp, orbit_fiber_over_cartan, sp_kernel_certificate, sp_moment, sp_trivial_action,
    CoadjointOrbitSpace, CotangentGroupoid,
};
use crate::lie::{certify, jm_complete, jordan_decompose, LieAlgebraSpec, LieElement};
use crate::linalg::rational::int;
use crate::linalg::{rational_canonical_form, Rational, RationalMatrix};
use crate::random::{self, SeededRng};
use crate::residual::{ax_presentation, subquotient_data, trivial_action_core};
use crate::roots::{orbit_dimension, richardson, LeviOrbitPair, LeviSubset, Partition};
use crate::slices::{
    contracting_weights, fundamental_rep, membership_sx, poisson_slice_check, principal_triple, slodowy_slice, Slice,
};

pub const SUITES: &[&str] = &[
    "jordan", "jm", "slodowy", "fundamental", "contracting", "induction", "classes", "perp", "natural", "residual",
    "weyl", "sp", "groupoid",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckLine>,
    pub ok: bool,
}

#[derive(Default)]
struct Tally {
    checks: Vec<CheckLine>,
}

impl Tally {
    fn record(&mut self, name: &str, ok: bool) {
        match self.checks.iter_mut().find(|c| c.name == name) {
            Some(c) => {
                c.total += 1;
                c.passed += ok as usize;
            }
            None => self.checks.push(CheckLine { name: name.into(), passed: ok as usize, total: 1 }),
        }
    }
}

/// Run one suite (or `"all"`, which concatenates every suite's checks).
pub fn run_suite(suite: &str, n: usize, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut tally = Tally::default();
    let mut rng = random::rng(seed);
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    for name in names {
        run_one(name, n, samples, &mut rng, &mut tally)?;
    }
    let ok = tally.checks.iter().all(|c| c.passed == c.total);
    Ok(SuiteReport { suite: suite.into(), n, seed, samples, checks: tally.checks, ok })
}

fn run_one(suite: &str, n: usize, samples: usize, rng: &mut SeededRng, t: &mut Tally) -> Result<()> {
    let gl = LieAlgebraSpec::gl(n);
    match suite {
        "jordan" => {
            for _ in 0..samples {
                let x = gl.element(random::random_rational_spectrum(rng, n))?;
                let jd = jordan_decompose(&x)?;
                t.record("certificate", certify(&x, &jd)?.all_ok());
                let y = gl.element(random::random_matrix(rng, n, 3))?;
                let jd = jordan_decompose(&y)?;
                t.record("certificate (arbitrary spectrum)", certify(&y, &jd)?.all_ok());
            }
        }
        "jm" => {
            for lambda in Partition::all(n).into_iter().filter(|l| l.len() < n) {
                let e = gl.element(lambda.nilpotent_representative())?;
                let triple = jm_complete(&e)?;
                t.record("bracket relations", triple.check()?.all());
                t.record("slice dimension = dim g_e", slodowy_slice(&triple, gl)?.dim() == lambda.centralizer_dim());
            }
        }
        "slodowy" => {
            for lambda in Partition::all(n).into_iter().filter(|l| l.len() < n) {
                let e = gl.element(lambda.nilpotent_representative())?;
                let s = slodowy_slice(&jm_complete(&e)?, gl)?;
                for _ in 0..samples {
                    let coords: Vec<Rational> = (0..s.dim()).map(|_| random::small_rational(rng, 3)).collect();
                    let y = s.point(&coords)?;
                    t.record("poisson transversal", poisson_slice_check(&s, &y)?.ok());
                }
            }
        }
        "fundamental" => {
            for _ in 0..samples {
                let x = gl.element(random::random_regular(rng, n))?;
                let s = fundamental_rep(&x)?;
                let on_slice = n == 1 || slodowy_slice(&principal_triple(gl)?, gl)?.contains(&s)?;
                t.record("on principal slice", on_slice);
                t.record("conjugate", rational_canonical_form(s.matrix())? == rational_canonical_form(x.matrix())?);
            }
        }
        "contracting" => {
            for lambda in Partition::all(n).into_iter().filter(|l| l.len() < n) {
                let e = gl.element(lambda.nilpotent_representative())?;
                let w = contracting_weights(&jm_complete(&e)?, gl)?;
                t.record("ad_h weights on g_f <= 0", w.iter().all(|&m| m <= 0));
                t.record("slice weights >= 2", w.iter().all(|&m| 2 - m >= 2));
            }
        }
        "induction" => {
            for levi in LeviSubset::all(n) {
                t.record("richardson = transpose", richardson(levi.blocks())? == levi.sorted().transpose());
                let orbit_parts: Vec<Partition> = levi.blocks().iter().map(|&b| random::random_partition(rng, b)).collect();
                let pair = LeviOrbitPair::new(levi.blocks().to_vec(), orbit_parts)?;
                let ind = crate::roots::ls_induce(&pair)?;
                t.record(
                    "dim Ind = dim O + 2 dim n",
                    orbit_dimension(&ind, n)? == pair.levi_orbit_dim() + 2 * levi.nilradical_dim(),
                );
            }
        }
        "classes" => {
            let labels = enumerate_classes(gl);
            for _ in 0..samples {
                let m = random::random_rational_spectrum(rng, n);
                let x = gl.element(m)?;
                let label = classify(&x)?;
                t.record("label enumerated", labels.contains(&label));
                let y = x.conjugate(&random::random_invertible(rng, n))?;
                t.record("conjugation invariant", classify(&y)? == label);
                let c = loop {
                    let c = random::small_rational(rng, 4);
                    if !c.is_zero() {
                        break c;
                    }
                };
                t.record("dilation invariant", classify(&x.scale(&c))? == label);
            }
            for label in &labels {
                let x = label.representative();
                t.record("representative classifies back", classify(&x)? == *label);
                t.record(
                    "dimension = dim [g,x] + dim z(l)",
                    crate::classes::class_tangent(&x)?.dim() == class_dimension(label)?,
                );
            }
        }
        "perp" => {
            for g in algebras(n) {
                for label in enumerate_classes(g) {
                    t.record("class_perp = n(x)", trivial_action_core(&label.representative())?.equal());
                }
            }
        }
        "natural" => {
            for g in algebras(n) {
                for _ in 0..samples {
                    let (x, y) = random_natural_pair(rng, g)?;
                    let r = membership_sx(&y, &x);
                    t.record("descriptor = rank test", r.is_ok_and(|r| r.rank_test == Some(r.member)));
                }
            }
        }
        "residual" => {
            for g in algebras(n) {
                for label in enumerate_classes(g) {
                    let x = label.representative();
                    let d = subquotient_data(&x)?;
                    t.record("dim A = rank T", d.dim_a == d.rank_t);
                    t.record("A(x) presentations agree", ax_presentation(&x)?.agree());
                }
            }
        }
        "weyl" => {
            let d = random::distinct_rationals(rng, n);
            let orbit = CoadjointOrbitSpace::new(gl.element(RationalMatrix::diag(&d))?);
            let expected: usize = (1..=n).product();
            t.record("n! diagonal points", orbit_fiber_over_cartan(&orbit)?.len() == expected);
        }
        "sp" => {
            t.record("kernel certificate", sp_kernel_certificate(n)?.complete());
            for _ in 0..samples {
                let v: Vec<Rational> = (0..2 * n).map(|_| random::small_rational(rng, 3)).collect();
                let mu = sp_moment(&v)?;
                t.record("in sp", in_sp(&mu));
                t.record("rank <= 1", mu.rank() <= 1);
                t.record("nilpotent", mu.is_nilpotent());
                if v.iter().any(|a| !a.is_zero()) {
                    t.record("n(x) kills the fibre; -I moves v", sp_trivial_action(&v)?.ok());
                }
            }
        }
        "groupoid" => {
            let seed = rng.gen();
            t.record("axioms (i)-(vi)", groupoid_axiom_suite(&CotangentGroupoid::new(n), seed, samples).all_ok());
        }
        other => return Err(LieError::Unsupported(format!("verify suite {other:?}"))),
    }
    Ok(())
}

fn algebras(n: usize) -> Vec<LieAlgebraSpec> {
    let mut v = vec![LieAlgebraSpec::gl(n)];
    if n >= 2 {
        v.push(LieAlgebraSpec::sl(n));
    }
    v
}

/// Semisimple `x` with repeated small eigenvalues and `y` either generic
/// or in `g_x`, both conjugated by the same random matrix.
pub fn random_natural_pair<R: Rng>(rng: &mut R, g: LieAlgebraSpec) -> Result<(LieElement, LieElement)> {
    let n = g.n;
    let xd: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(0..3))).collect();
    let mut y = RationalMatrix::zeros(n, n);
    let in_gx = rng.gen_bool(0.7);
    for i in 0..n {
        for j in 0..n {
            if !in_gx || xd[i] == xd[j] {
                // sparse small entries make collisions (non-members) common
                if i == j || rng.gen_bool(0.5) {
                    y[(i, j)] = int(rng.gen_range(-2..=2));
                }
            }
        }
    }
    let mut x = RationalMatrix::diag(&xd);
    if !g.is_gl() {
        for m in [&mut x, &mut y] {
            let shift = m.trace() / int(n as i64);
            for i in 0..n {
                m[(i, i)] -= &shift;
            }
        }
    }
    let p = random::random_invertible(rng, n);
    let x = g.element(x)?.conjugate(&p)?;
    let y = g.element(y)?.conjugate(&p)?;
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_n3() {
        for suite in SUITES {
            let r = run_suite(suite, 3, 7, 3).unwrap();
            assert!(r.ok, "{r:?}");
        }
        assert!(run_suite("nope", 3, 7, 3).is_err());
    }
}
