use serde_json::{json, Value};

use k3mat::curve::{named, point_to_param, CurvePoint, WeierstrassModel};
use k3mat::exactnum::{BigRational, Field};
use k3mat::lattice::{discriminant_form, kummer_test, mod2, reduced_forms, DiscriminantGroup};
use k3mat::mwlat::{rank_formula_check, saturation_check, HeightContext};
use k3mat::nscat::{self, conic_equations, Curve};
use k3mat::surface::{curve_orbit, g_elements, search, singular_points, MatrixTriple, Parametrization};
use k3mat::Result;

use crate::output::{Certificate, Report};
use crate::suite;

type Q = BigRational;

fn param_json<F: Field>(p: &Parametrization<F>) -> Value {
    let names = ["x", "y", "z", "a", "b", "c"];
    let polys = [p.x(), p.y(), p.z(), p.a(), p.b(), p.c()];
    let mut m = serde_json::Map::new();
    for (n, f) in names.iter().zip(polys) {
        m.insert(n.to_string(), Value::String(f.display_var("t")));
    }
    Value::Object(m)
}

fn point_json<F: Field>(p: &CurvePoint<F>) -> Value {
    match p {
        CurvePoint::Infinity => json!({"u": "inf", "v": "inf"}),
        CurvePoint::Affine { u, v } => json!({"u": u.display_var("t"), "v": v.display_var("t")}),
    }
}

fn triple_json(m: &MatrixTriple) -> Value {
    let eig = m.integral_eigenvalues().map(|e| e.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    json!({
        "a": m.a.to_string(),
        "b": m.b.to_string(),
        "c": m.c.to_string(),
        "eigenvalues": eig,
        "trivial": m.is_trivial(),
    })
}

pub fn search_cmd(max: u32) -> Report {
    Report { records: search(max).iter().map(triple_json).collect(), certificates: vec![] }
}

pub fn param_cmd(ts: &[Q]) -> Result<Report> {
    let p = Parametrization::<Q>::lowest_degree();
    let locus = p.integral_trivial_locus()?;
    let mut records = vec![json!({
        "parametrization": param_json(&p),
        "degree": p.degree(),
        "trivial_locus": p.trivial_locus()?.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })];
    for t in ts {
        let pt = p.eval(t)?;
        let c = pt.integer_coords();
        let m = MatrixTriple::new(c[3].clone(), c[4].clone(), c[5].clone());
        let mut rec = triple_json(&m);
        rec["t"] = Value::String(t.to_string());
        rec["point"] = json!(c.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        records.push(rec);
    }
    let certificates = vec![
        Certificate::new("param.verify", "the family lies on X", p.verify(), true),
        Certificate::new(
            "param.trivial",
            "integral trivial locus",
            format!("[{}]", locus.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")),
            "[-2,-1,0,1,2,4,10]",
        ),
    ];
    Ok(Report { records, certificates })
}

pub fn mult_cmd(n: i64, emit_param: bool) -> Result<Report> {
    let model = WeierstrassModel::<Q>::generic_fiber();
    let pt = model.mul(n, &named::p())?;
    let mut rec = point_json(&pt);
    rec["n"] = json!(n);
    let mut certificates = vec![Certificate::new("mult.on_curve", "nP lies on E", model.contains(&pt), true)];
    if emit_param {
        let par = point_to_param(&pt)?;
        rec["parametrization"] = param_json(&par);
        rec["degree"] = json!(par.degree());
        certificates.push(Certificate::new("mult.verify", "parametrization lies on X", par.verify(), true));
    }
    Ok(Report { records: vec![rec], certificates })
}

pub fn fibers_cmd() -> Result<Report> {
    let model = WeierstrassModel::<Q>::generic_fiber();
    let fs = model.tate_classify()?;
    let records = fs
        .iter()
        .map(|f| json!({"place": f.place.to_string(), "type": f.kind.to_string(), "m": f.m, "m1": f.m1}))
        .collect();
    let r = rank_formula_check(&fs, 2);
    let certificates = vec![
        Certificate::new("fibers.sum", "sum of (m_v - 1)", r.sum_m_minus_1, 16),
        Certificate::new("fibers.rho", "2 + 2 + sum(m_v - 1)", r.rho, 20),
    ];
    Ok(Report { records, certificates })
}

pub fn height_cmd() -> Result<Report> {
    let model = WeierstrassModel::<k3mat::exactnum::QuadElem>::generic_fiber();
    let ctx = HeightContext::new(&model)?;
    let (p, q) = (named::p(), named::q());
    let pp = ctx.pairing(&p, &p)?;
    let qq = ctx.pairing(&q, &q)?;
    let pq = ctx.pairing(&p, &q)?;
    let sat = saturation_check()?;
    let fs = WeierstrassModel::<Q>::generic_fiber().tate_classify()?;
    let rho = rank_formula_check(&fs, 2).rho;
    let saturation = match sat.index {
        Some(i) if sat.passed() => format!("index {i}"),
        _ => "failed".into(),
    };
    let rec = json!({
        "pairing": {"PP": pp.to_string(), "QQ": qq.to_string(), "PQ": pq.to_string()},
        "torsion_order": sat.torsion_order,
        "rank_L": 2,
        "rho": rho,
        "saturation": saturation,
    });
    let certificates = vec![
        Certificate::new("height.PP", "<P,P>", &pp, "3/2"),
        Certificate::new("height.QQ", "<Q,Q>", &qq, "1/2"),
        Certificate::new("height.PQ", "<P,Q>", &pq, "0"),
        Certificate::new("height.saturation", "P, Q, T1, T2 generate", saturation, "index 1"),
    ];
    Ok(Report { records: vec![rec], certificates })
}

pub fn descent_cmd() -> Result<Report> {
    let rep = saturation_check()?;
    let records = rep.steps.iter().map(|s| json!({"step": s.name, "detail": s.detail, "passed": s.passed})).collect();
    Ok(Report { records, certificates: suite::descent() })
}

fn group_json(g: &DiscriminantGroup) -> Value {
    json!({
        "invariants": g.invariants.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "q": g.generator_values().iter().map(|v| mod2(v).to_string()).collect::<Vec<_>>(),
    })
}

pub fn forms_cmd(det: i64) -> Result<Report> {
    let one24 = k3mat::exactnum::rat(1, 24);
    let mut records = Vec::new();
    for f in reduced_forms(det, true, true)? {
        let g = discriminant_form(&f.lattice()?)?;
        records.push(json!({
            "form": [[f.a, f.b], [f.b, f.c]],
            "discriminant_group": group_json(&g),
            "attains_1/24": g.attains(&one24)?,
            "kummer": kummer_test(&f),
        }));
    }
    let certificates = if det == 48 { suite::forms() } else { vec![] };
    Ok(Report { records, certificates })
}

pub fn ns_verify_cmd() -> Result<Report> {
    let h = nscat::hyperplane_class()?;
    let rec = json!({
        "disc": nscat::ns_lattice()?.disc().to_string(),
        "signature": nscat::ns_lattice()?.signature(),
        "hyperplane": h.m,
    });
    Ok(Report { records: vec![rec], certificates: suite::ns() })
}

pub fn ns_count_cmd(degree: i64, genus: i64, list: bool) -> Result<Report> {
    let cs = nscat::enumerate_classes(degree, genus)?;
    let mut records = vec![json!({"degree": degree, "genus": genus, "count": cs.len()})];
    if list {
        records.extend(cs.iter().map(|c| json!({"class": c.to_string(), "m": c.m})));
    }
    let mut certificates = vec![];
    if (degree, genus) == (2, 0) {
        certificates.push(Certificate::new("count.441", "classes with C.H = 2, C^2 = -2", cs.len(), 441));
        let bad = nscat::dsq_mismatches(&cs, genus)?;
        certificates.push(Certificate::new("count.dsq", "diagonal form cross-check mismatches", bad.len(), 0));
    }
    Ok(Report { records, certificates })
}

pub fn ns_catalogue_cmd() -> Result<Report> {
    let r = nscat::catalogue_441()?;
    let records = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "orbit": e.orbit,
                "conic": conic_equations(&e.conic),
                "added": e.added.iter().map(|p| Curve::Exceptional(p.clone()).to_string()).collect::<Vec<_>>(),
                "class": e.class.to_string(),
                "curve": e.is_curve(),
            })
        })
        .collect();
    let certificates = suite::count();
    Ok(Report { records, certificates })
}

pub fn orbits_cmd() -> Report {
    let mut records: Vec<Value> = singular_points()
        .iter()
        .map(|p| {
            let c = p.integer_coords();
            json!({
                "kind": "node",
                "point": c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "jacobian_rank": p.jacobian_rank(),
            })
        })
        .collect();
    for (i, c) in nscat::basis_conics() {
        if [10, 16, 17].contains(&i) {
            records.push(json!({"kind": "conic orbit", "representative": format!("D{i}"), "size": curve_orbit(&c).len()}));
        }
    }
    records.insert(0, json!({"kind": "group", "order": g_elements().len()}));
    Report { records, certificates: suite::symmetry() }
}

pub fn verify_all_cmd() -> Report {
    Report { records: vec![], certificates: suite::all() }
}
