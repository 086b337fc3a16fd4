//! One line per acceptance criterion, with its runtime bound.

use std::time::{Duration, Instant};

use quasimap_sl2::graded::Grading;
use quasimap_sl2::gring::rat;
use quasimap_sl2::potential::{self, Kind, SymIso};
use quasimap_sl2::{koszul, nilhecke, omega, verma, zastava, Result};

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<()>,
}

fn fail(what: String) -> quasimap_sl2::Error {
    quasimap_sl2::Error::CheckFailed { check: "acceptance".into(), witness: what }
}

fn verma_relations() -> Result<()> {
    verma::verify_uv_relations(8)
}

fn k0_lemma() -> Result<()> {
    (0..=6).try_for_each(|d| zastava::k0_cross_check(d, 24))
}

fn resolution() -> Result<()> {
    for d in 0..=4 {
        koszul::verify_complex(&koszul::build_resolution(d)?)?;
    }
    for d in 0..=2 {
        let r = koszul::build_resolution(d)?;
        koszul::verify_commutes(&r)?;
        koszul::verify_exactness(&r, 20)?;
    }
    koszul::verify_exactness(&koszul::build_resolution(3)?, 12)?;
    Ok(())
}

fn factorization() -> Result<()> {
    for d in 0..=6 {
        zastava::factorize_f(d)?;
    }
    for d in 0..=3 {
        let fac = zastava::factorize_f(d)?;
        let c1 = zastava::power_basis(&fac.mid, "c'", d)?;
        let c2 = zastava::power_basis(&fac.c, "c''", d)?;
        let r1 = zastava::freeness_basis_check(&fac.f1, &c1, 16, Grading::Bigraded)?;
        let r2 = zastava::freeness_basis_check(&fac.f3, &c2, 16, Grading::VOnly)?;
        if !r1.is_free() || !r2.is_free() {
            return Err(fail(format!("d={d}: {r1:?} {r2:?}")));
        }
    }
    Ok(())
}

fn intertwiner() -> Result<()> {
    verma::geometric_intertwiner_check(6)
}

fn nonsplit() -> Result<()> {
    for d in 0..=3 {
        let ns = koszul::omega_nonsplit_check(&koszul::build_resolution(d)?, 12)?;
        if !ns.certified() {
            return Err(fail(format!("d={d}: {ns:?}")));
        }
    }
    for d in 0..=6 {
        let c = koszul::obstruction_coefficient(d)?;
        if c != rat(-1) {
            return Err(fail(format!("d={d}: obstruction {c}")));
        }
    }
    Ok(())
}

fn naisse_vaz() -> Result<()> {
    for d in 0..=6 {
        omega::verify_odd_images(&omega::make_phi(d)?)?;
        omega::verify_odd_images(&omega::make_psi(d)?)?;
        omega::verify_psi_matches_f(d)?;
        if !omega::basis_ranks_match(d, 20)? {
            return Err(fail(format!("d={d}: basis ranks")));
        }
    }
    for d in 0..=3 {
        let r = omega::rank_checks(d, 16)?;
        if !r.passed() {
            return Err(fail(format!("d={d}: {r:?}")));
        }
    }
    for d in 0..=4 {
        omega::verify_kernel(d)?;
        omega::verify_orthogonality(d)?;
    }
    Ok(())
}

fn nilhecke_suite() -> Result<()> {
    for d in 0..=4 {
        let r = nilhecke::nilhecke_suite(d, 0)?;
        if !r.passed() || r.slide_left.is_none() || r.slide_right.is_none() {
            return Err(fail(format!("{r:?}")));
        }
    }
    Ok(())
}

fn superpotential() -> Result<()> {
    for d in 1..=5 {
        for n in 0..=5 {
            potential::build_w(d, n)?;
        }
    }
    for d in 1..=6 {
        for n in 0..d {
            potential::vanishing_check(d, n)?;
        }
    }
    Ok(())
}

fn invariant_rings() -> Result<()> {
    for n in 0..=4 {
        for d in 0..=n {
            potential::sym_iso_check(Kind::A, d, n, 20)?;
            let b = potential::sym_iso_check(Kind::B, d, n, 20)?;
            if (b == SymIso::ZeroRing) != (d == n) {
                return Err(fail(format!("B d={d} n={n}: {b:?}")));
            }
            if d < n {
                potential::diagram_check(d, n)?;
            }
        }
    }
    Ok(())
}

fn simple_rep() -> Result<()> {
    (0..=6).try_for_each(potential::simple_rep_check)
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, name: "Verma relations", limit: Duration::from_secs(1), run: verma_relations },
    Criterion { id: 2, name: "K0 classes of E and F", limit: Duration::from_secs(10), run: k0_lemma },
    Criterion { id: 3, name: "two-term resolution", limit: Duration::from_secs(120), run: resolution },
    Criterion { id: 4, name: "factorization and freeness", limit: Duration::from_secs(60), run: factorization },
    Criterion { id: 5, name: "intertwiner", limit: Duration::from_secs(1), run: intertwiner },
    Criterion { id: 6, name: "non-splitting", limit: Duration::from_secs(30), run: nonsplit },
    Criterion { id: 7, name: "Naisse-Vaz comparison", limit: Duration::from_secs(60), run: naisse_vaz },
    Criterion { id: 8, name: "nilHecke suite", limit: Duration::from_secs(60), run: nilhecke_suite },
    Criterion { id: 9, name: "superpotential", limit: Duration::from_secs(10), run: superpotential },
    Criterion { id: 10, name: "invariant rings", limit: Duration::from_secs(60), run: invariant_rings },
    Criterion { id: 11, name: "simple representation", limit: Duration::from_secs(1), run: simple_rep },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(()) if elapsed <= c.limit => "PASS",
            _ => "FAIL",
        };
        let note = match &outcome {
            Ok(()) if elapsed > c.limit => " (over time)".to_string(),
            Ok(()) => String::new(),
            Err(e) => format!(" ({e})"),
        };
        println!(
            "criterion {:>2} {:<28} {verdict} {:>9.3}s / {}s{note}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        if verdict == "FAIL" {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
