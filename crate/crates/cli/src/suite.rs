//! The claims checked by `verify-all`, grouped by topic.

use k3mat::curve::{named, point_to_param, CurvePoint, WeierstrassModel};
use k3mat::exactnum::{from_roots, int, zpoly, BigRational, Poly, QuadElem, RatFunc};
use k3mat::lattice::{disc48_forms, discriminant_form, kummer_test, reduced_forms, BinaryForm};
use k3mat::mwlat::{rank_formula_check, saturation_check, HeightContext};
use k3mat::nscat;
use k3mat::surface::{curve_orbit, g_elements, search, singular_points, singular_representative, MatrixTriple, Parametrization};
use k3mat::Result;

use crate::output::Certificate;

type Q = BigRational;

fn check(claim: &str, description: &str, expected: &str, f: impl FnOnce() -> Result<String>) -> Certificate {
    match f() {
        Ok(v) => Certificate::new(claim, description, v, expected),
        Err(e) => Certificate::error(claim, description, e, expected),
    }
}

fn triple_string(m: &MatrixTriple) -> String {
    format!("({},{},{})", m.a, m.b, m.c)
}

pub fn matrix() -> Vec<Certificate> {
    vec![
        check("matrix.eigen", "eigenvalues of M(125,99,57)", "(190,-55,-135)", || {
            let e = MatrixTriple::new(125, 99, 57).integral_eigenvalues();
            Ok(e.map_or("none".into(), |[x, y, z]| format!("({x},{y},{z})")))
        }),
        check("param.t3", "low-degree family at t = 3", "[190:-55:-135:125:99:57]", || {
            let p = Parametrization::<Q>::lowest_degree().eval(&int(3))?;
            let c = p.integer_coords();
            Ok(format!("[{}:{}:{}:{}:{}:{}]", c[0], c[1], c[2], c[3], c[4], c[5]))
        }),
        check("param.verify", "low-degree family lies on X", "true", || {
            Ok(Parametrization::<Q>::lowest_degree().verify().to_string())
        }),
        check("param.trivial", "integral trivial locus", "[-2,-1,0,1,2,4,10]", || {
            let s = Parametrization::<Q>::lowest_degree().integral_trivial_locus()?;
            Ok(format!("[{}]", s.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")))
        }),
    ]
}

pub fn search_claims() -> Vec<Certificate> {
    let list = |v: Vec<MatrixTriple>| v.iter().map(triple_string).collect::<Vec<_>>().join(" ");
    vec![
        check("search.114", "nontrivial triples with max <= 114", "(26,51,114)", || Ok(list(search(114)))),
        check("search.125", "nontrivial triples with max <= 125", "(26,51,114) (57,99,125)", || {
            Ok(list(search(125)))
        }),
    ]
}

pub fn curve() -> Vec<Certificate> {
    let model = WeierstrassModel::<Q>::generic_fiber();
    let mut out = vec![
        check("curve.disc", "discriminant", "2^10 t^2 (t^2-1)^6 (t^2-4)^4", || {
            let want = &(&(&from_roots::<Q>(&[0, 0]) * &zpoly::<Q>(&[-1, 0, 1]).pow(6)) * &zpoly::<Q>(&[-4, 0, 1]).pow(4))
                * &Poly::constant(int(1024));
            Ok(if model.discriminant() == want {
                "2^10 t^2 (t^2-1)^6 (t^2-4)^4".into()
            } else {
                model.discriminant().display_var("t")
            })
        }),
        check("curve.j", "j-invariant", "4(t^4+56t^2+16)^3/(t^2(t^2-4)^4)", || {
            let num = &zpoly::<Q>(&[16, 0, 56, 0, 1]).pow(3) * &Poly::constant(int(4));
            let den = &from_roots::<Q>(&[0, 0]) * &zpoly::<Q>(&[-4, 0, 1]).pow(4);
            let j = model.j_invariant()?;
            Ok(if j == RatFunc::new(num, den)? { "4(t^4+56t^2+16)^3/(t^2(t^2-4)^4)".into() } else { j.display_var("t") })
        }),
        check("fibers.table", "Kodaira types (place:type:m:m1)", "t+2:I4:4:4 t+1:I0*:5:4 t:I2:2:2 t-1:I0*:5:4 t-2:I4:4:4 inf:I2:2:2", || {
            let fs = model.tate_classify()?;
            Ok(fs.iter().map(|f| format!("{}:{}:{}:{}", f.place, f.kind, f.m, f.m1)).collect::<Vec<_>>().join(" "))
        }),
        check("rank.formula", "2 + r + sum(m_v - 1) with r = 2", "sum 16, rho 20", || {
            let r = rank_formula_check(&model.tate_classify()?, 2);
            Ok(format!("sum {}, rho {}", r.sum_m_minus_1, r.rho))
        }),
    ];
    out.extend(heights());
    out
}

fn heights() -> Vec<Certificate> {
    let model = WeierstrassModel::<QuadElem>::generic_fiber();
    let ctx = HeightContext::new(&model);
    let p = named::p::<QuadElem>();
    let q = named::q();
    let run = |claim: &str, desc: &str, want: &str, a: &CurvePoint<QuadElem>, b: &CurvePoint<QuadElem>| {
        check(claim, desc, want, || Ok(ctx.as_ref().map_err(Clone::clone)?.pairing(a, b)?.to_string()))
    };
    let mut out = vec![
        run("height.PP", "<P,P>", "3/2", &p, &p),
        run("height.QQ", "<Q,Q>", "1/2", &q, &q),
        run("height.PQ", "<P,Q>", "0", &p, &q),
    ];
    out.push(check("height.2P", "<2P,2P> from the coordinates of 2P", "6", || {
        let p2 = model.mul(2, &p)?;
        Ok(ctx.as_ref().map_err(Clone::clone)?.height(&p2)?.to_string())
    }));
    out.push(check("height.torsion", "heights of T1, T2, T1+T2", "0 0 0", || {
        let c = ctx.as_ref().map_err(Clone::clone)?;
        let hs = named::two_torsion::<QuadElem>()[1..].iter().map(|t| c.height(t)).collect::<Result<Vec<_>>>()?;
        Ok(hs.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" "))
    }));
    out
}

/// `a, b, c` of 2P as printed, up to a rational scalar.
pub fn doubled_p_expected() -> [Poly<Q>; 3] {
    let a = &from_roots::<Q>(&[0]) * &zpoly(&[-12, 0, 20, 0, -8, 0, 1]);
    let b = -(&from_roots::<Q>(&[0]) * &zpoly(&[4, 0, 0, 0, -4, 0, 1]));
    let c = &zpoly::<Q>(&[-2, 0, 1]) * &zpoly(&[-4, 0, 8, 0, -6, 0, 1]);
    [a, b, c]
}

pub fn multiples() -> Vec<Certificate> {
    let model = WeierstrassModel::<Q>::generic_fiber();
    let mut out = vec![check("mult.2P", "parametrization of 2P matches the degree-8 polynomials", "true", || {
        let p2 = model.mul(2, &named::p())?;
        let par = point_to_param(&p2)?;
        let [a, b, c] = doubled_p_expected();
        let want = Parametrization::new([Poly::zero(), Poly::zero(), Poly::zero(), a, b, c]);
        Ok((par.abc_projectively_equal(&want) && par.degree() == 8).to_string())
    })];
    out.push(check("witness.nP", "nP for n = 1..5: verified and pairwise distinct", "5 verified, 5 distinct", || {
        let ps = witnesses()?;
        let verified = ps.iter().filter(|p| p.verify()).count();
        let mut distinct = 0;
        for (i, p) in ps.iter().enumerate() {
            if ps[..i].iter().all(|q| !q.projectively_equal(p)) {
                distinct += 1;
            }
        }
        Ok(format!("{verified} verified, {distinct} distinct"))
    }));
    out
}

/// Parametrizations of `nP` for `n = 1..5`.
pub fn witnesses() -> Result<Vec<Parametrization<Q>>> {
    let model = WeierstrassModel::<Q>::generic_fiber();
    (1..=5).map(|n| point_to_param(&model.mul(n, &named::p())?)).collect()
}

pub fn descent() -> Vec<Certificate> {
    let rep = match saturation_check() {
        Ok(r) => r,
        Err(e) => return vec![Certificate::error("descent", "saturation check", e, "index 1")],
    };
    let mut out: Vec<Certificate> = rep
        .steps
        .iter()
        .map(|s| Certificate::new(&format!("descent.step.{}", s.name), &s.detail, s.passed, true))
        .collect();
    out.push(Certificate::new("descent.disc", "disc of the 4x scaled Gram of P, Q", &rep.disc, "12"));
    out.push(Certificate::new("descent.index", "index of <P,Q,T1,T2> in the Mordell-Weil group", rep.index.map_or("none".into(), |i| i.to_string()), "1"));
    out
}

pub fn forms() -> Vec<Certificate> {
    let fmt_forms = |v: &[BinaryForm]| v.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ");
    vec![
        check("forms.48", "reduced even positive forms of det 48", &fmt_forms(&disc48_forms()), || {
            Ok(fmt_forms(&reduced_forms(48, true, true)?))
        }),
        check("forms.one24", "forms whose discriminant form attains 1/24", "[[2,0],[0,24]]", || {
            let mut hits = Vec::new();
            for f in reduced_forms(48, true, true)? {
                if discriminant_form(&f.lattice()?)?.attains(&k3mat::exactnum::rat(1, 24))? {
                    hits.push(f);
                }
            }
            Ok(fmt_forms(&hits))
        }),
        check("forms.kummer", "kummer test of [[2,0],[0,24]]", "false", || {
            Ok(kummer_test(&BinaryForm::new(2, 0, 24)).to_string())
        }),
    ]
}

pub fn ns() -> Vec<Certificate> {
    let mut out = vec![
        check("ns.disc", "det of the NS Gram matrix", "-48", || Ok(nscat::ns_lattice()?.disc().to_string())),
        check("ns.signature", "signature of NS", "(1, 19)", || Ok(format!("{:?}", nscat::ns_lattice()?.signature()))),
        check("ns.H2", "H^2", "6", || Ok(nscat::hyperplane_class()?.square()?.to_string())),
    ];
    match nscat::decomposition_check() {
        Ok(r) => {
            out.extend(r.steps.iter().map(|s| Certificate::new(&format!("ns.block.{}", s.name), &s.detail, s.passed, true)));
            out.push(Certificate::new("ns.index", "[NS : E8+E8+<-2>+<-24>+U]", &r.index, "1"));
        }
        Err(e) => out.push(Certificate::error("ns.block", "decomposition", e, "passed")),
    }
    out
}

pub fn count() -> Vec<Certificate> {
    let mut out = vec![check("count.441", "classes with C.H = 2, C^2 = -2", "441", || {
        Ok(nscat::enumerate_classes(2, 0)?.len().to_string())
    })];
    match nscat::catalogue_441() {
        Ok(r) => {
            let parts = r.orbit_counts.iter().map(|(_, n)| n.to_string()).collect::<Vec<_>>().join(" + ");
            out.push(Certificate::new("count.partition", "catalogue by conic orbit (D17, D10, D16)", parts, "9 + 288 + 144"));
            out.push(Certificate::new("count.equal", "catalogue equals the enumeration", r.matches(), true));
            let mut sizes: Vec<usize> = r.orbit_sizes.iter().map(|(_, n)| *n).collect();
            sizes.sort_by(|a, b| b.cmp(a));
            out.push(Certificate::new("count.curves", "strict transforms of curves on X", r.curves().count(), 63));
            let s = sizes.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" + ");
            out.push(Certificate::new("count.orbits", "conic orbit sizes", s, "36 + 18 + 9"));
        }
        Err(e) => out.push(Certificate::error("count.catalogue", "catalogue", e, "441")),
    }
    out.push(check("count.fibers", "components of the singular fibres", "22", || {
        Ok(nscat::reconstruct_fiber_classes()?.iter().map(|f| f.components.len()).sum::<usize>().to_string())
    }));
    out
}

pub fn symmetry() -> Vec<Certificate> {
    vec![
        Certificate::new("symmetry.order", "|G|", g_elements().len(), 144),
        Certificate::new(
            "symmetry.nodes",
            "orbit of [2:-1:-1:1:1:1] and Jacobian ranks",
            {
                let pts = singular_points();
                let ok = pts.iter().all(|p| p.on_surface() && p.jacobian_rank() == 2);
                format!("{} points, rank 2: {ok}", pts.len())
            },
            "12 points, rank 2: true",
        ),
        Certificate::new(
            "symmetry.representative",
            "the representative node lies in its orbit",
            singular_points().contains(&singular_representative()),
            true,
        ),
        Certificate::new(
            "symmetry.conics",
            "orbit sizes of D17, D10, D16",
            nscat::basis_conics()
                .into_iter()
                .filter(|(i, _)| [17, 10, 16].contains(i))
                .map(|(i, c)| format!("D{i}:{}", curve_orbit(&c).len()))
                .collect::<Vec<_>>()
                .join(" "),
            "D10:18 D16:36 D17:9",
        ),
    ]
}

/// Every claim, in a fixed order.
pub fn all() -> Vec<Certificate> {
    let mut v = Vec::new();
    v.extend(matrix());
    v.extend(search_claims());
    v.extend(curve());
    v.extend(multiples());
    v.extend(descent());
    v.extend(ns());
    v.extend(forms());
    v.extend(count());
    v.extend(symmetry());
    v
}
