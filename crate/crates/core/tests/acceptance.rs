//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Every comparison is exact equality of structured values. A criterion
//! also fails when it runs past its time budget.

mod support;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use k3mat::curve::{named, point_to_param, KodairaKind, Place, KodairaFiber, WeierstrassModel};
use k3mat::exactnum::{from_roots, int, rat, zpoly, BigInt, Poly, QuadElem, RatFunc};
use k3mat::lattice::{discriminant_form, kummer_test, reduced_forms, BinaryForm};
use k3mat::mwlat::{rank_formula_check, saturation_check, HeightContext};
use k3mat::nscat;
use k3mat::surface::{
    g_elements, search_with_workers, singular_points, singular_representative, MatrixTriple,
    Parametrization,
};
use proptest::test_runner::{Config, TestRunner};
use support::Q;

type Outcome = k3mat::Result<(bool, String)>;

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

const MS: Duration = Duration::from_millis(1);
const S: Duration = Duration::from_secs(1);

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: "1", name: "matrix examples", budget: MS, run: matrix_examples },
        Criterion { id: "2", name: "search", budget: 30 * S, run: search_box },
        Criterion { id: "3", name: "trivial locus", budget: S, run: trivial_locus },
        Criterion { id: "4", name: "discriminant and j", budget: S, run: curve_model },
        Criterion { id: "5", name: "singular fibres", budget: S, run: fibres },
        Criterion { id: "6", name: "heights", budget: 5 * S, run: heights },
        Criterion { id: "7", name: "2P parametrization", budget: 5 * S, run: doubled_p },
        Criterion { id: "8", name: "descent certificate", budget: 5 * S, run: descent },
        Criterion { id: "9", name: "rank formula", budget: MS, run: rank_formula },
        Criterion { id: "10", name: "NS lattice", budget: S, run: ns_lattice },
        Criterion { id: "11", name: "determinant-48 forms", budget: S, run: forms },
        Criterion { id: "12", name: "class count", budget: 60 * S, run: class_count },
        Criterion { id: "13", name: "symmetry", budget: S, run: symmetry },
        Criterion { id: "14", name: "property suites", budget: 60 * S, run: properties },
        Criterion { id: "nP", name: "witnesses n = 1..5", budget: 60 * S, run: witnesses },
    ]
}

fn matrix_examples() -> Outcome {
    let eig = MatrixTriple::new(125, 99, 57).integral_eigenvalues();
    let want = [190, -55, -135].map(BigInt::from);
    let pt = Parametrization::<Q>::lowest_degree().eval(&int(3))?;
    let coords = pt.integer_coords();
    let want_pt = [190, -55, -135, 125, 99, 57].map(BigInt::from);
    let ok = eig.as_ref() == Some(&want) && coords[..] == want_pt[..];
    Ok((ok, format!("eigenvalues {eig:?}, t = 3 gives {coords:?}")))
}

fn search_box() -> Outcome {
    let key = |v: Vec<MatrixTriple>| v.iter().map(|m| [m.a.clone(), m.b.clone(), m.c.clone()]).collect::<Vec<_>>();
    let s114 = key(search_with_workers(114, 1));
    let s125 = key(search_with_workers(125, 1));
    let t = |a: i64, b: i64, c: i64| [a, b, c].map(BigInt::from);
    let ok = s114 == vec![t(26, 51, 114)] && s125 == vec![t(26, 51, 114), t(57, 99, 125)];
    Ok((ok, format!("max 114: {s114:?}; max 125: {s125:?}")))
}

fn trivial_locus() -> Outcome {
    let p = Parametrization::<Q>::lowest_degree();
    let got = p.integral_trivial_locus()?;
    let want: BTreeSet<Q> = [-2, -1, 0, 1, 2, 4, 10].into_iter().map(int).collect();
    let rational = p.trivial_locus()?;
    let mut genuine = true;
    for t in &rational {
        genuine &= p.eval(t)?.is_trivial();
    }
    let shown = |s: &BTreeSet<Q>| s.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ");
    Ok((got == want && genuine, format!("{{{}}}; all rational roots {{{}}} trivial: {genuine}", shown(&got), shown(&rational))))
}

fn curve_model() -> Outcome {
    let e = WeierstrassModel::<Q>::generic_fiber();
    let (t2, d1, d4) = (from_roots::<Q>(&[0, 0]), zpoly::<Q>(&[-1, 0, 1]), zpoly::<Q>(&[-4, 0, 1]));
    let disc = &(&(&t2 * &d1.pow(6)) * &d4.pow(4)) * &Poly::constant(int(1024));
    let j = RatFunc::new(&zpoly::<Q>(&[16, 0, 56, 0, 1]).pow(3) * &Poly::constant(int(4)), &t2 * &d4.pow(4))?;
    let got_j = e.j_invariant()?;
    let ok = e.discriminant() == disc && got_j == j;
    Ok((ok, format!("disc = {}, j = {got_j}", e.discriminant())))
}

static FIBRES: OnceLock<Vec<KodairaFiber>> = OnceLock::new();

fn fibres() -> Outcome {
    let fs = WeierstrassModel::<Q>::generic_fiber().tate_classify()?;
    let fs = FIBRES.get_or_init(|| fs);
    let got: Vec<(Place, KodairaKind, u32, u32)> = fs.iter().map(|f| (f.place.clone(), f.kind, f.m, f.m1)).collect();
    let fin = |a: i64| Place::Finite(int(a));
    let want = vec![
        (fin(-2), KodairaKind::I(4), 4, 4),
        (fin(-1), KodairaKind::IStar(0), 5, 4),
        (fin(0), KodairaKind::I(2), 2, 2),
        (fin(1), KodairaKind::IStar(0), 5, 4),
        (fin(2), KodairaKind::I(4), 4, 4),
        (Place::Infinity, KodairaKind::I(2), 2, 2),
    ];
    let shown: Vec<String> = fs.iter().map(|f| format!("{}:{}:{}:{}", f.place, f.kind, f.m, f.m1)).collect();
    Ok((got == want, shown.join(" ")))
}

fn heights() -> Outcome {
    let e = WeierstrassModel::<QuadElem>::generic_fiber();
    let ctx = HeightContext::new(&e)?;
    let (p, q) = (named::p(), named::q());
    let (pp, qq, pq) = (ctx.pairing(&p, &p)?, ctx.pairing(&q, &q)?, ctx.pairing(&p, &q)?);
    let h2p = ctx.height(&e.mul(2, &p)?)?;
    let ok = pp == rat(3, 2) && qq == rat(1, 2) && pq == int(0) && h2p == int(6);
    Ok((ok, format!("<P,P> = {pp}, <Q,Q> = {qq}, <P,Q> = {pq}, <2P,2P> = {h2p}")))
}

fn doubled_p() -> Outcome {
    let e = WeierstrassModel::<Q>::generic_fiber();
    let par = point_to_param(&e.mul(2, &named::p())?)?;
    let a = &from_roots::<Q>(&[0]) * &zpoly(&[-12, 0, 20, 0, -8, 0, 1]);
    let b = -(&from_roots::<Q>(&[0]) * &zpoly(&[4, 0, 0, 0, -4, 0, 1]));
    let c = &zpoly::<Q>(&[-2, 0, 1]) * &zpoly(&[-4, 0, 8, 0, -6, 0, 1]);
    let want = Parametrization::new([Poly::zero(), Poly::zero(), Poly::zero(), a, b, c]);
    let ok = par.abc_projectively_equal(&want) && par.degree() == 8 && par.verify();
    Ok((ok, format!("degree {}, {}", par.degree(), par.display_lines()[3..].join(", "))))
}

fn descent() -> Outcome {
    let r = saturation_check()?;
    let square_steps: Vec<_> = r.steps.iter().filter(|s| s.name.starts_with("descent-T")).collect();
    let ok = r.disc == int(12)
        && r.index == Some(1)
        && square_steps.len() == 4
        && r.steps.iter().all(|s| s.passed)
        && r.torsion_order == 4;
    let failed: Vec<&str> = r.steps.iter().filter(|s| !s.passed).map(|s| s.name.as_str()).collect();
    Ok((ok, format!("disc {}, index {:?}, {} descent steps, failed steps {failed:?}", r.disc, r.index, square_steps.len())))
}

/// Runs on the fibre table of criterion 5.
fn rank_formula() -> Outcome {
    let fs = FIBRES.get().map_or(&[][..], Vec::as_slice);
    let r = rank_formula_check(fs, 2);
    Ok((r.sum_m_minus_1 == 16 && r.rho == 20, format!("sum(m_v - 1) = {}, rho = {}", r.sum_m_minus_1, r.rho)))
}

fn ns_lattice() -> Outcome {
    let l = nscat::ns_lattice()?;
    let d = nscat::decomposition_check()?;
    let ok = l.disc() == int(-48) && l.signature() == (1, 19) && d.passed() && d.index == BigInt::from(1);
    let failed: Vec<&str> = d.failures().iter().map(|s| s.name.as_str()).collect();
    Ok((ok, format!("disc {}, signature {:?}, index {}, failed blocks {failed:?}", l.disc(), l.signature(), d.index)))
}

fn forms() -> Outcome {
    let got = reduced_forms(48, true, true)?;
    let want = vec![BinaryForm::new(2, 0, 24), BinaryForm::new(4, 0, 12), BinaryForm::new(6, 0, 8), BinaryForm::new(8, 4, 8)];
    let mut hits = Vec::new();
    for f in &got {
        if discriminant_form(&f.lattice()?)?.attains(&rat(1, 24))? {
            hits.push(*f);
        }
    }
    let kummer = kummer_test(&BinaryForm::new(2, 0, 24));
    let ok = got == want && hits == vec![BinaryForm::new(2, 0, 24)] && !kummer;
    let shown = |v: &[BinaryForm]| v.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ");
    Ok((ok, format!("forms {}; 1/24 attained by {}; kummer {kummer}", shown(&got), shown(&hits))))
}

fn class_count() -> Outcome {
    let cs = nscat::enumerate_classes(2, 0)?;
    let r = nscat::catalogue_441()?;
    let parts: Vec<usize> = r.orbit_counts.iter().map(|(_, n)| *n).collect();
    let per_orbit: Vec<(&str, usize)> =
        r.orbit_counts.iter().map(|(o, _)| (*o, r.curves().filter(|e| e.orbit == *o).count())).collect();
    let curves = r.curves().count();
    let ok = cs.len() == 441
        && r.matches()
        && parts == [9, 288, 144]
        && curves == 63
        && per_orbit == [("D17", 9), ("D10", 18), ("D16", 36)];
    Ok((ok, format!("{} classes, catalogue {parts:?} (equal: {}), {curves} curves by orbit {per_orbit:?}", cs.len(), r.matches())))
}

fn symmetry() -> Outcome {
    let order = g_elements().len();
    let nodes = singular_points();
    let ranks_ok = nodes.iter().all(|p| p.on_surface() && p.jacobian_rank() == 2);
    let ok = order == 144 && nodes.len() == 12 && ranks_ok && nodes.contains(&singular_representative());
    Ok((ok, format!("|G| = {order}, {} nodes, all of Jacobian rank 2: {ranks_ok}", nodes.len())))
}

fn properties() -> Outcome {
    let ctx = HeightContext::new(&support::model())?;
    let run = |cases: u32, name: &str, f: &mut dyn FnMut(&mut TestRunner) -> Result<(), String>| {
        let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
        f(&mut runner).map_err(|e| format!("{name}: {e}"))
    };
    let ns = nscat::ns_lattice()?;
    let results = [
        run(24, "associativity", &mut |r| {
            let s = (support::combo(2), support::combo(2), support::combo(2));
            r.run(&s, |(x, y, z)| support::associativity(x, y, z)).map_err(|e| e.to_string())
        }),
        run(24, "bilinearity", &mut |r| {
            let s = (support::combo(2), support::combo(2), support::combo(2));
            r.run(&s, |(x, y, z)| support::bilinearity(&ctx, x, y, z)).map_err(|e| e.to_string())
        }),
        run(64, "short vectors", &mut |r| {
            r.run(&(support::definite_gram(), 1i64..=20), |(g, n)| support::short_vectors_match(&g, n))
                .map_err(|e| e.to_string())
        }),
        run(16, "disc invariance", &mut |r| {
            r.run(&support::unimodular(20), |t| support::disc_invariant(&ns, &t)).map_err(|e| e.to_string())
        }),
    ];
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    let detail = if failures.is_empty() {
        "associativity 24, bilinearity 24, short vectors 64, NS disc invariance 16 cases".to_string()
    } else {
        failures.join("; ")
    };
    Ok((failures.is_empty(), detail))
}

fn witnesses() -> Outcome {
    let e = WeierstrassModel::<Q>::generic_fiber();
    let mut pars: Vec<Parametrization<Q>> = Vec::new();
    let mut degrees = Vec::new();
    for n in 1..=5 {
        let par = point_to_param(&e.mul(n, &named::p())?)?;
        if !par.verify() || pars.iter().any(|q| q.projectively_equal(&par)) {
            return Ok((false, format!("{n}P: verified {}, degrees so far {degrees:?}", par.verify())));
        }
        degrees.push(par.degree());
        pars.push(par);
    }
    Ok((true, format!("five verified, pairwise distinct parametrizations of degrees {degrees:?}")))
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let t = Instant::now();
        let outcome = (c.run)();
        let took = t.elapsed();
        let (ok, detail) = match outcome {
            Ok((ok, d)) => (ok, d),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = took <= c.budget;
        let status = if ok && in_time { "PASS" } else { "FAIL" };
        if status == "FAIL" {
            failed += 1;
        }
        let over = if in_time { "" } else { " OVER BUDGET" };
        println!("{status} [{:>2}] {:<22} {:>10.3?} / {:<6?}{over}  {detail}", c.id, c.name, took, c.budget);
    }
    println!("{} criteria, {failed} failed", criteria().len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
