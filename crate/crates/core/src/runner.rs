//! Batch verification over all modules.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graded::Grading;
use crate::gring::rat;
use crate::koszul;
use crate::nilhecke;
use crate::omega;
use crate::potential::{self, Kind, SymIso};
use crate::report::{CheckRecord, ConfigEcho, Report};
use crate::verma;
use crate::zastava::{self, Freeness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Zastava,
    Koszul,
    Verma,
    Omega,
    Nilhecke,
    Potential,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Zastava, Suite::Koszul, Suite::Verma, Suite::Omega, Suite::Nilhecke, Suite::Potential];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Zastava => "zastava",
            Suite::Koszul => "koszul",
            Suite::Verma => "verma",
            Suite::Omega => "omega",
            Suite::Nilhecke => "nilhecke",
            Suite::Potential => "potential",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::OutOfRange(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub dmax: usize,
    pub nmax: usize,
    pub vmax: i64,
    /// Empty means all suites.
    pub suites: Vec<Suite>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { dmax: 4, nmax: 4, vmax: 20, suites: Vec::new(), seed: 0 }
    }
}

impl SuiteConfig {
    /// Selected suites, deduplicated, in canonical order.
    pub fn selected(&self) -> Vec<Suite> {
        if self.suites.is_empty() {
            return Suite::ALL.to_vec();
        }
        let mut s = self.suites.clone();
        s.sort();
        s.dedup();
        s
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            dmax: self.dmax,
            nmax: self.nmax,
            vmax: self.vmax,
            suites: self.selected().iter().map(|s| s.name().to_string()).collect(),
            seed: self.seed,
        }
    }
}

type Outcome = Result<(bool, String)>;
type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Task {
    module: &'static str,
    check: &'static str,
    params: Vec<(&'static str, i64)>,
    run: CheckFn,
}

fn task<F>(module: &'static str, check: &'static str, params: Vec<(&'static str, i64)>, run: F) -> Task
where
    F: Fn() -> Outcome + Send + Sync + 'static,
{
    Task { module, check, params, run: Box::new(run) }
}

fn ok(_: impl Sized) -> Outcome {
    Ok((true, String::new()))
}

fn freeness(f: Freeness) -> Outcome {
    Ok(match f {
        Freeness::Free => (true, String::new()),
        Freeness::NotFree { witness, reason } => (false, format!("at {witness}: {reason}")),
    })
}

fn zastava_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    let vmax = cfg.vmax;
    for d in 0..=cfg.dmax {
        let p = vec![("d", d as i64)];
        out.push(task("zastava", "f_bidegree", p.clone(), move || ok(zastava::make_f(d)?)));
        out.push(task("zastava", "factorization", p.clone(), move || ok(zastava::factorize_f(d)?)));
        let pv = vec![("d", d as i64), ("vmax", vmax)];
        out.push(task("zastava", "k0_classes", pv, move || ok(zastava::k0_cross_check(d, vmax)?)));
    }
    let fv = vmax.min(16);
    for d in 0..=cfg.dmax.min(3) {
        let p = vec![("d", d as i64), ("vmax", fv)];
        out.push(task("zastava", "freeness_c1", p.clone(), move || {
            let fac = zastava::factorize_f(d)?;
            let basis = zastava::power_basis(&fac.mid, "c'", d)?;
            freeness(zastava::freeness_basis_check(&fac.f1, &basis, fv, Grading::Bigraded)?)
        }));
        out.push(task("zastava", "freeness_c2", p, move || {
            let fac = zastava::factorize_f(d)?;
            let basis = zastava::power_basis(&fac.c, "c''", d)?;
            freeness(zastava::freeness_basis_check(&fac.f3, &basis, fv, Grading::VOnly)?)
        }));
    }
    out
}

fn koszul_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    let vmax = cfg.vmax;
    for d in 0..=cfg.dmax {
        let p = vec![("d", d as i64)];
        out.push(task("koszul", "complex", p.clone(), move || {
            ok(koszul::verify_complex(&koszul::build_resolution(d)?)?)
        }));
        out.push(task("koszul", "k0_class", p.clone(), move || {
            let r = koszul::build_resolution(d)?;
            let got = koszul::k0_class(&r);
            let want = zastava::resolution_class(d);
            Ok((got == want, if got == want { String::new() } else { format!("{got} vs {want}") }))
        }));
        out.push(task("koszul", "obstruction", p, move || {
            let c = koszul::obstruction_coefficient(d)?;
            Ok((c == rat(-1), format!("coefficient {c}")))
        }));
    }
    for d in 0..=cfg.dmax.min(2) {
        out.push(task("koszul", "commutes", vec![("d", d as i64)], move || {
            ok(koszul::verify_commutes(&koszul::build_resolution(d)?)?)
        }));
    }
    let mut exact: Vec<(usize, i64)> = (0..=cfg.dmax.min(2)).map(|d| (d, vmax)).collect();
    if cfg.dmax >= 3 {
        exact.push((3, vmax.min(12)));
    }
    for (d, v) in exact {
        out.push(task("koszul", "exactness", vec![("d", d as i64), ("vmax", v)], move || {
            let ranks = koszul::verify_exactness(&koszul::build_resolution(d)?, v)?;
            Ok((true, format!("{} pieces", ranks.len())))
        }));
    }
    let nv = vmax.min(12);
    for d in 0..=cfg.dmax.min(3) {
        out.push(task("koszul", "nonsplit", vec![("d", d as i64), ("vmax", nv)], move || {
            let ns = koszul::omega_nonsplit_check(&koszul::build_resolution(d)?, nv)?;
            let detail = match (&ns.no_retraction, &ns.witness) {
                (Some(true), Some(w)) => format!("no retraction, witness {w}"),
                (None, _) => format!("incomplete below vmax {}", koszul::retraction_degree_bound(d)),
                _ => "retraction exists".to_string(),
            };
            Ok((ns.certified(), detail))
        }));
    }
    out
}

fn verma_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let dmax = cfg.dmax;
    let mut out = vec![
        task("verma", "uv_relations", vec![("dmax", dmax as i64)], move || ok(verma::verify_uv_relations(dmax)?)),
        task("verma", "intertwiner", vec![("dmax", dmax as i64)], move || {
            ok(verma::geometric_intertwiner_check(dmax)?)
        }),
    ];
    for n in 0..=cfg.nmax {
        out.push(task("verma", "highest_weight", vec![("n", n as i64)], move || {
            ok(verma::specialize_highest_weight(n)?)
        }));
    }
    out
}

fn omega_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    let vmax = cfg.vmax;
    for d in 0..=cfg.dmax {
        let p = vec![("d", d as i64)];
        out.push(task("omega", "structure_maps", p.clone(), move || {
            omega::verify_odd_images(&omega::make_phi(d)?)?;
            ok(omega::verify_odd_images(&omega::make_psi(d)?)?)
        }));
        out.push(task("omega", "psi_matches_f", p.clone(), move || ok(omega::verify_psi_matches_f(d)?)));
        out.push(task("omega", "kernel", p.clone(), move || ok(omega::verify_kernel(d)?)));
        out.push(task("omega", "orthogonality", p, move || ok(omega::verify_orthogonality(d)?)));
        out.push(task("omega", "basis_ranks", vec![("d", d as i64), ("vmax", vmax)], move || {
            Ok((omega::basis_ranks_match(d, vmax)?, String::new()))
        }));
    }
    let rv = vmax.min(16);
    for d in 0..=cfg.dmax.min(3) {
        out.push(task("omega", "free_bases", vec![("d", d as i64), ("vmax", rv)], move || {
            let r = omega::rank_checks(d, rv)?;
            Ok((r.passed(), if r.passed() { String::new() } else { format!("{r:?}") }))
        }));
    }
    out
}

fn nilhecke_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let seed = cfg.seed;
    (0..=cfg.dmax)
        .map(|d| {
            let p = vec![("d", d as i64), ("max_dv", nilhecke::SAMPLE_DEGREE)];
            task("nilhecke", "relations", p, move || {
                let r = nilhecke::nilhecke_suite(d, seed)?;
                let show = |k: Option<i64>| k.map_or("none".to_string(), |k| k.to_string());
                let detail = format!(
                    "samples={} TcT={} Tc'T={} slide_left={} slide_right={}",
                    r.samples,
                    show(r.t_cp_t),
                    show(r.t_cpp_t),
                    show(r.slide_left),
                    show(r.slide_right)
                );
                Ok((r.passed(), if r.passed() { detail } else { format!("{detail} {r:?}") }))
            })
        })
        .collect()
}

fn potential_tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    let (nmax, vmax) = (cfg.nmax, cfg.vmax);
    for d in 1..=cfg.dmax.max(1) {
        for n in 0..=nmax {
            out.push(task("potential", "homogeneity", vec![("d", d as i64), ("n", n as i64)], move || {
                ok(potential::build_w(d, n)?)
            }));
        }
    }
    for d in 1..=cfg.dmax + 2 {
        for n in 0..d {
            out.push(task("potential", "vanishing", vec![("d", d as i64), ("n", n as i64)], move || {
                ok(potential::vanishing_check(d, n)?)
            }));
        }
    }
    for n in 0..=nmax {
        for d in 0..=n {
            for (kind, name) in [(Kind::A, "sym_iso_a"), (Kind::B, "sym_iso_b")] {
                let p = vec![("d", d as i64), ("n", n as i64), ("vmax", vmax)];
                out.push(task("potential", name, p, move || {
                    Ok(match potential::sym_iso_check(kind, d, n, vmax)? {
                        SymIso::Iso => (true, String::new()),
                        SymIso::ZeroRing => (true, "zero ring".to_string()),
                    })
                }));
            }
            let p = vec![("d", d as i64), ("n", n as i64), ("vmax", vmax)];
            out.push(task("potential", "alt_grading", p, move || {
                let (h, ok) = potential::alternative_grading_check(d, n, vmax)?;
                let sizes = [d, n - d];
                let inv = potential::invariant_hilbert_count(&sizes, vmax);
                let same = h.try_eq(&inv)?;
                Ok((ok, format!("matches invariant series: {same}")))
            }));
            if d < n {
                out.push(task("potential", "diagram", vec![("d", d as i64), ("n", n as i64)], move || {
                    ok(potential::diagram_check(d, n)?)
                }));
            }
        }
        out.push(task("potential", "simple_rep", vec![("n", n as i64)], move || ok(potential::simple_rep_check(n)?)));
    }
    out
}

fn tasks(cfg: &SuiteConfig) -> Vec<Task> {
    cfg.selected()
        .into_iter()
        .flat_map(|s| match s {
            Suite::Zastava => zastava_tasks(cfg),
            Suite::Koszul => koszul_tasks(cfg),
            Suite::Verma => verma_tasks(cfg),
            Suite::Omega => omega_tasks(cfg),
            Suite::Nilhecke => nilhecke_tasks(cfg),
            Suite::Potential => potential_tasks(cfg),
        })
        .collect()
}

/// Run every selected check; records come back in task order whatever the
/// scheduling.
pub fn run(cfg: &SuiteConfig) -> Report {
    let records: Vec<CheckRecord> = tasks(cfg)
        .into_par_iter()
        .map(|t| {
            let (passed, witness) = match (t.run)() {
                Ok(r) => r,
                Err(e) => (false, e.to_string()),
            };
            CheckRecord {
                module: t.module.to_string(),
                check: t.check.to_string(),
                params: t.params.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>(),
                passed,
                witness,
            }
        })
        .collect();
    Report::new(cfg.echo(), records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let cfg = SuiteConfig { dmax: 1, nmax: 2, vmax: 8, suites: Vec::new(), seed: 3 };
        let a = run(&cfg);
        let failures: Vec<_> = a.failures().collect();
        assert!(a.passed, "{failures:?}");
        assert_eq!(a.to_json(), run(&cfg).to_json());
    }

    #[test]
    fn selection_is_canonical() {
        let cfg = SuiteConfig { suites: vec![Suite::Verma, Suite::Zastava, Suite::Verma], ..Default::default() };
        assert_eq!(cfg.selected(), vec![Suite::Zastava, Suite::Verma]);
    }
}
