//! The 45 geometries in the `x0 = ct` chart.
//!
//! Each row stores `(g, h, Γ)` independently; nothing is derived from `g`.
//! Spatial indices are raised and lowered with `δ`, space-time ones with `η`.

use crate::exactnum::{q, rf, Rational, DEFAULT_SEED};
use crate::geometry::{sample_domain, Connection, DomainCond, Geometry, SignatureDescriptor, TensorField};
use crate::liefields::VectorField;

use super::generators::poly;

/// Catalog order of the geometry names.
pub const GEOMETRY_NAMES: [&str; 45] = [
    "Riem", "Lob", "LBdS", "Euc", "E_2", "E_2-", "dS", "BdSL", "AdS", "DTdS", "Min", "P_2+", "P_2-", "EP_2-",
    "DTP_2+", "NH_+", "NH_-", "ENH_+", "ENH_-", "NH_+'", "ENH_+'", "NH_2", "NH_2'", "ENH_2", "DTNH_2", "HN_+",
    "HN_-", "EHN_+", "EHN_-", "HN_-'", "DTHN", "E'", "P'", "G", "EG", "C", "EC", "C_2", "EC_2", "EG_2", "G_2",
    "G'", "EG'", "G_2'", "EG_2'",
];

/// Canonical spelling: underscores are optional (`E2-` ≡ `E_2-`).
pub fn canonical_geometry_name(name: &str) -> Option<&'static str> {
    let squash = |s: &str| s.replace('_', "");
    GEOMETRY_NAMES.iter().copied().find(|n| squash(n) == squash(name))
}

const EUCLID: [i64; 4] = [1, 1, 1, 1];
const LORENTZ: [i64; 4] = [1, -1, -1, -1];
const SPATIAL: [i64; 4] = [0, 1, 1, 1];

/// `x·x` under a diagonal metric.
fn square(m: [i64; 4]) -> String {
    let terms: Vec<String> = (0..4).filter(|&i| m[i] != 0).map(|i| format!("({})*x{}^2", m[i], i)).collect();
    format!("({})", terms.join(" + "))
}

/// `(G x)_μ`.
fn lowered(m: [i64; 4], mu: usize) -> String {
    format!("(({})*x{})", m[mu], mu)
}

fn diag(m: [i64; 4], a: usize, b: usize) -> i64 {
    if a == b {
        m[a]
    } else {
        0
    }
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

fn sym2(covariant: bool, f: impl Fn(usize, usize) -> String) -> TensorField {
    TensorField::from_matrix(std::array::from_fn(|m| std::array::from_fn(|n| rf(&f(m, n)))), covariant)
}

fn conn(f: impl Fn(usize, usize, usize) -> String) -> Connection {
    let mut c = Connection::zero();
    for l in 0..4 {
        for m in 0..4 {
            for n in m..4 {
                let s = f(l, m, n);
                if s != "0" {
                    c.set_sym(l, m, n, rf(&s));
                }
            }
        }
    }
    c
}

fn field(src: [&str; 4]) -> VectorField {
    VectorField::new(src.map(poly))
}

fn dilation() -> VectorField {
    VectorField::dilation()
}

fn spatial_dilation() -> VectorField {
    field(["0", "x1", "x2", "x3"])
}

fn partials(range: std::ops::Range<usize>) -> Vec<VectorField> {
    range.map(VectorField::partial).collect()
}

struct Row {
    name: &'static str,
    title: &'static str,
    algebra: &'static str,
    g: TensorField,
    h: TensorField,
    conn: Connection,
    domain: Vec<DomainCond>,
    signature: &'static str,
    curvature: Rational,
    free: Vec<&'static str>,
    kernel: Vec<VectorField>,
}

fn finish(r: Row) -> Geometry {
    let signature = SignatureDescriptor::parse(r.signature).expect("valid signature literal");
    let mut geo = Geometry {
        name: r.name.to_string(),
        title: r.title.to_string(),
        algebra: r.algebra.to_string(),
        g: r.g,
        h: r.h,
        conn: r.conn,
        domain: r.domain,
        ranks: signature.ranks(),
        signature,
        free_parameters: r.free.into_iter().map(rf).collect(),
        curvature: r.curvature,
        witness: None,
        g_kernel: r.kernel,
    };
    geo.witness = sample_domain(&geo, DEFAULT_SEED, 1).ok().and_then(|mut v| v.pop());
    geo
}

fn pos(s: &str) -> DomainCond {
    DomainCond::positive(rf(s))
}

fn neg(s: &str) -> DomainCond {
    DomainCond::negative(rf(s))
}

/// Beltrami model of a constant-curvature space with `σ = 1 − s (x·x)_G/l²`:
/// `g = ε/σ (G + s (Gx)(Gx)/(l²σ))`, `h = εσ(G⁻¹ − s x x/l²)`,
/// `Γ^λ_{μν} = s(δ^λ_μ (Gx)_ν + δ^λ_ν (Gx)_μ)/(l²σ)`.
fn beltrami(m: [i64; 4], s: i64, eps: i64) -> (TensorField, TensorField, Connection, String) {
    let sigma = format!("(1 - ({})*{}/l^2)", s, square(m));
    let g = sym2(true, |a, b| {
        format!("({})*(({}) + ({})*{}*{}/(l^2*{}))/{}", eps, diag(m, a, b), s, lowered(m, a), lowered(m, b), sigma, sigma)
    });
    let h = sym2(false, |a, b| format!("({})*{}*(({}) - ({})*x{}*x{}/l^2)", eps, sigma, diag(m, a, b), s, a, b));
    let c = conn(|l, a, b| {
        if l != a && l != b {
            return "0".into();
        }
        format!(
            "({})*(({})*{} + ({})*{})/(l^2*{})",
            s,
            delta(l, a),
            lowered(m, b),
            delta(l, b),
            lowered(m, a),
            sigma
        )
    });
    (g, h, c, sigma)
}

/// Projective cone over the quadric `(x·x)_G`:
/// `g = ε_g l²((x·x)_G G − (Gx)(Gx))/(x·x)_G²`, `Γ^λ_{μν} = −(δ^λ_μ (Gx)_ν + δ^λ_ν (Gx)_μ)/(x·x)_G`.
fn cone(m: [i64; 4], eps_g: i64) -> (TensorField, Connection, String) {
    let xx = square(m);
    let g = sym2(true, |a, b| {
        format!("({})*l^2*({}*({}) - {}*{})/{}^2", eps_g, xx, diag(m, a, b), lowered(m, a), lowered(m, b), xx)
    });
    let c = conn(|l, a, b| {
        if l != a && l != b {
            return "0".into();
        }
        format!("-(({})*{} + ({})*{})/{}", delta(l, a), lowered(m, b), delta(l, b), lowered(m, a), xx)
    });
    (g, c, xx)
}

/// `h = ε l⁻⁴ (x·x)_G (x^μ ∂_μ)²`.
fn cone_h(xx: &str, eps: i64) -> TensorField {
    sym2(false, |a, b| format!("({})*{}*x{}*x{}/l^4", eps, xx, a, b))
}

fn riem_family(name: &'static str) -> Geometry {
    let (title, algebra, m, s, eps, inside, sig, k) = match name {
        "Riem" => ("4d Riemann sphere", "r", EUCLID, -1, 1, true, "(+,+,+,+)", -1),
        "Lob" => ("4d Lobachevsky space", "l", EUCLID, 1, 1, true, "(+,+,+,+)", 1),
        "LBdS" => ("Lobachevsky-de Sitter exterior", "l", EUCLID, 1, -1, false, "(-,+,+,+)", -1),
        "dS" => ("de Sitter", "d_+", LORENTZ, 1, 1, true, "(+,-,-,-)", 1),
        "BdSL" => ("de Sitter exterior", "d_+", LORENTZ, 1, 1, false, "(+,+,+,+)", 1),
        "AdS" => ("anti-de Sitter", "d_-", LORENTZ, -1, 1, true, "(+,-,-,-)", -1),
        "DTdS" => ("anti-de Sitter exterior", "d_-", LORENTZ, -1, -1, false, "(+,+,-,-)", 1),
        _ => unreachable!(),
    };
    let (g, h, conn, sigma) = beltrami(m, s, eps);
    let domain = vec![if inside { pos(&sigma) } else { neg(&sigma) }];
    finish(Row {
        name,
        title,
        algebra,
        g,
        h,
        conn,
        domain,
        signature: sig,
        curvature: q(k),
        free: vec![],
        kernel: vec![],
    })
}

fn flat(name: &'static str) -> Geometry {
    let (title, algebra, gd, hd, sig, kernel): (_, _, [i64; 4], [i64; 4], _, Vec<VectorField>) = match name {
        "Euc" => ("4d Euclidean space", "e", EUCLID, EUCLID, "(+,+,+,+)", vec![]),
        "Min" => ("Minkowski space-time", "p", LORENTZ, LORENTZ, "(+,-,-,-)", vec![]),
        "G" => ("Galilei space-time", "g", [1, 0, 0, 0], [0, -1, -1, -1], "(+;-,-,-)", partials(1..4)),
        "EG" => ("Euclidean Galilei", "g", [1, 0, 0, 0], [0, 1, 1, 1], "(+;+,+,+)", partials(1..4)),
        "C" => ("Carroll space-time", "c", [0, -1, -1, -1], [1, 0, 0, 0], "(-,-,-;+)", partials(0..1)),
        "EC" => ("Euclidean Carroll", "c", [0, 1, 1, 1], [1, 0, 0, 0], "(+,+,+;+)", partials(0..1)),
        _ => unreachable!(),
    };
    finish(Row {
        name,
        title,
        algebra,
        g: sym2(true, |a, b| diag(gd, a, b).to_string()),
        h: sym2(false, |a, b| diag(hd, a, b).to_string()),
        conn: Connection::zero(),
        domain: vec![],
        signature: sig,
        curvature: q(0),
        free: vec![],
        kernel,
    })
}

fn cone_family(name: &'static str) -> Geometry {
    let (title, algebra, m, eps_g, eps_h, inside, sig, k) = match name {
        "E_2" => ("second Euclidean", "e2", EUCLID, 1, 1, true, "(+,+,+;+)", -1),
        "E_2-" => ("second Euclidean, reversed h", "e2", EUCLID, 1, -1, true, "(+,+,+;-)", -1),
        "P_2+" => ("second Poincare, x.x < 0", "p2", LORENTZ, -1, 1, false, "(+,-,-;-)", 1),
        "P_2-" => ("second Poincare, x.x > 0", "p2", LORENTZ, 1, 1, true, "(-,-,-;+)", -1),
        "EP_2-" => ("Euclidean second Poincare", "p2", LORENTZ, -1, 1, true, "(+,+,+;+)", 1),
        "DTP_2+" => ("second Poincare, reversed h", "p2", LORENTZ, -1, -1, false, "(+,-,-;+)", 1),
        _ => unreachable!(),
    };
    let (g, conn, xx) = cone(m, eps_g);
    finish(Row {
        name,
        title,
        algebra,
        g,
        h: cone_h(&xx, eps_h),
        conn,
        domain: vec![if inside { pos(&xx) } else { neg(&xx) }],
        signature: sig,
        curvature: q(k),
        free: vec![],
        kernel: vec![dilation()],
    })
}

/// Newton-Hooke family: `g = ε_g dx0²/σ²`, `h = ε_h σ δ^{ij}`, `σ = 1 ∓ x0²/l²`.
fn nh_family(name: &'static str) -> Geometry {
    let (title, algebra, upper, eps_g, eps_h, inside, sig, k) = match name {
        "NH_+" => ("Newton-Hooke +", "n_+", true, 1, -1, true, "(+;-,-,-)", 1),
        "NH_-" => ("Newton-Hooke -", "n_-", false, 1, -1, true, "(+;-,-,-)", -1),
        "ENH_+" => ("Euclidean Newton-Hooke +", "n_+", true, 1, 1, true, "(+;+,+,+)", 1),
        "ENH_-" => ("Euclidean Newton-Hooke -", "n_-", false, 1, 1, true, "(+;+,+,+)", -1),
        "NH_+'" => ("Newton-Hooke + exterior", "n_+", true, -1, -1, false, "(-;+,+,+)", -1),
        "ENH_+'" => ("Euclidean Newton-Hooke + exterior", "n_+", true, 1, -1, false, "(+;+,+,+)", 1),
        _ => unreachable!(),
    };
    let pm = if upper { 1 } else { -1 };
    let sigma = format!("(1 - ({})*x0^2/l^2)", pm);
    let g = sym2(true, |a, b| if a == 0 && b == 0 { format!("({})/{}^2", eps_g, sigma) } else { "0".into() });
    let h = sym2(false, |a, b| if a == b && a > 0 { format!("({})*{}", eps_h, sigma) } else { "0".into() });
    let conn = conn(|l, a, b| match (l, a, b) {
        (0, 0, 0) => format!("({})*2*x0/(l^2*{})", pm, sigma),
        (i, 0, j) if i > 0 && i == j => format!("({})*x0/(l^2*{})", pm, sigma),
        _ => "0".into(),
    });
    finish(Row {
        name,
        title,
        algebra,
        g,
        h,
        conn,
        domain: vec![if inside { pos(&sigma) } else { neg(&sigma) }],
        signature: sig,
        curvature: q(k),
        free: vec![],
        kernel: partials(1..4),
    })
}

/// `g = ε_g g_{NH_2}` with `g_{NH_2} = l²((x·dx)² − r² dx·dx)/r⁴` (spatial).
fn nh2_metric(eps_g: i64) -> (TensorField, Connection, String) {
    let (g, conn, rr) = cone(SPATIAL, -eps_g);
    (g, conn, rr)
}

fn nh2_family(name: &'static str) -> Geometry {
    // (title, algebra, ε_g, h coefficient of ∂0², h coefficient of DD (×l⁻⁴ r²), signature, k, free)
    let (title, algebra, eps_g, h0, hd, sig, k, free): (_, _, i64, i64, i64, _, i64, Vec<&'static str>) = match name {
        "NH_2" => ("second Newton-Hooke", "n_+2", 1, 1, -1, "(-,-;+,-)", 1, vec![]),
        "NH_2'" => ("second Newton-Hooke, reversed g", "n_+2", -1, 1, -1, "(+,+;+,-)", -1, vec![]),
        "ENH_2" => ("Euclidean second Newton-Hooke", "n_-2", -1, 1, 1, "(+,+;+,+)", -1, vec![]),
        "DTNH_2" => ("second Newton-Hooke, reversed space", "n_-2", 1, 1, 1, "(-,-;+,+)", 1, vec![]),
        "G_2" => ("second Galilei", "g2", -1, 0, -1, "(+,+;-)", -1, vec!["l^2*x0^2/(x1^2 + x2^2 + x3^2)"]),
        "EG_2" => ("Euclidean second Galilei", "g2", -1, 0, 1, "(+,+;+)", -1, vec!["l^2*x0^2/(x1^2 + x2^2 + x3^2)"]),
        "G_2'" => ("second para-Galilei", "g'2", 1, 1, 0, "(-,-;+)", 1, vec!["l^4/(x1^2 + x2^2 + x3^2)"]),
        "EG_2'" => ("Euclidean second para-Galilei", "g'2", -1, 1, 0, "(+,+;+)", -1, vec!["l^4/(x1^2 + x2^2 + x3^2)"]),
        _ => unreachable!(),
    };
    let (g, conn, rr) = nh2_metric(eps_g);
    let h = sym2(false, |a, b| {
        let t = if a == 0 && b == 0 { h0 } else { 0 };
        format!("{}*(({})*l^2*{} + ({})*x{}*x{})/l^4", rr, t, delta(a, b), hd, a, b)
    });
    finish(Row {
        name,
        title,
        algebra,
        g,
        h,
        conn,
        domain: vec![pos(&rr)],
        signature: sig,
        curvature: q(k),
        free,
        kernel: vec![VectorField::partial(0), spatial_dilation()],
    })
}

/// Hooke-Newton family: 3d Beltrami space with `σ = 1 ± r²/l²`, `h = ε_h σ ∂0²`.
fn hn_family(name: &'static str) -> Geometry {
    let (title, algebra, upper, eps_g, eps_h, inside, sig, k) = match name {
        "HN_+" => ("Hooke-Newton +", "h_+", true, -1, 1, true, "(-,-,-;+)", 1),
        "HN_-" => ("Hooke-Newton -", "h_-", false, -1, 1, true, "(-,-,-;+)", -1),
        "EHN_+" => ("Euclidean Hooke-Newton +", "h_+", true, 1, 1, true, "(+,+,+;+)", -1),
        "EHN_-" => ("Euclidean Hooke-Newton -", "h_-", false, 1, 1, true, "(+,+,+;+)", 1),
        "HN_-'" => ("Hooke-Newton - exterior", "h_-", false, -1, -1, false, "(-,+,+;+)", -1),
        "DTHN" => ("Hooke-Newton - exterior, reversed g", "h_-", false, 1, -1, false, "(+,-,-;+)", 1),
        _ => unreachable!(),
    };
    let pm = if upper { 1 } else { -1 };
    let sigma = format!("(1 + ({})*(x1^2 + x2^2 + x3^2)/l^2)", pm);
    let g = sym2(true, |a, b| {
        if a == 0 || b == 0 {
            "0".into()
        } else {
            format!("({})*(({}) - ({})*x{}*x{}/(l^2*{}))/{}", eps_g, delta(a, b), pm, a, b, sigma, sigma)
        }
    });
    let h = sym2(false, |a, b| if a == 0 && b == 0 { format!("({})*{}", eps_h, sigma) } else { "0".into() });
    let conn = conn(|l, a, b| match (l, a, b) {
        (0, 0, i) if i > 0 => format!("-({})*x{}/(l^2*{})", pm, i, sigma),
        (i, j, kk) if i > 0 && j > 0 && kk > 0 => {
            format!("-({})*(({})*x{} + ({})*x{})/(l^2*{})", pm, delta(i, j), kk, delta(i, kk), j, sigma)
        }
        _ => "0".into(),
    });
    finish(Row {
        name,
        title,
        algebra,
        g,
        h,
        conn,
        domain: vec![if inside { pos(&sigma) } else { neg(&sigma) }],
        signature: sig,
        curvature: q(k),
        free: vec![],
        kernel: partials(0..1),
    })
}

/// Rows living near time infinity, all sharing
/// `Γ^0_{00} = −2/x0`, `Γ^i_{0j} = −δ^i_j/x0` and the domain `x0² > 0`.
fn dual_family(name: &'static str) -> Geometry {
    let e = |s: &str| s.to_string();
    let (title, algebra, sig, kernel, g, h): (_, _, _, Vec<VectorField>, TensorField, TensorField) = match name {
        "E'" => (
            "para-Euclidean",
            "e'",
            "(+,+,+,+)",
            vec![],
            // (l²/x0²)[(l²σ/x0²) dx0² + dx·dx − (2/x0) x·dx dx0], σ = 1 + r²/l²
            sym2(true, |a, b| match (a, b) {
                (0, 0) => e("(l^2 + x1^2 + x2^2 + x3^2)*l^2/x0^4"),
                (0, i) | (i, 0) => format!("-l^2*x{}/x0^3", i),
                (i, j) => format!("{}*l^2/x0^2", delta(i, j)),
            }),
            // l⁻⁴ x0² [(x·∂)² + l² δ^{ij} ∂_i ∂_j]
            sym2(false, |a, b| {
                let s = if a > 0 { delta(a, b) } else { 0 };
                format!("x0^2*(x{}*x{} + ({})*l^2)/l^4", a, b, s)
            }),
        ),
        "P'" => (
            "para-Poincare",
            "p'",
            "(+,-,-,-)",
            vec![],
            sym2(true, |a, b| match (a, b) {
                (0, 0) => e("(l^2 - x1^2 - x2^2 - x3^2)*l^2/x0^4"),
                (0, i) | (i, 0) => format!("l^2*x{}/x0^3", i),
                (i, j) => format!("-{}*l^2/x0^2", delta(i, j)),
            }),
            sym2(false, |a, b| {
                let s = if a > 0 { delta(a, b) } else { 0 };
                format!("x0^2*(x{}*x{} - ({})*l^2)/l^4", a, b, s)
            }),
        ),
        "C_2" | "EC_2" => {
            let sg = if name == "C_2" { -1 } else { 1 };
            (
                if sg < 0 { "second Carroll" } else { "Euclidean second Carroll" },
                "c2",
                if sg < 0 { "(-,-,-;+)" } else { "(+,+,+;+)" },
                vec![dilation()],
                // ε l² d(x/x0)·d(x/x0)
                sym2(true, move |a, b| match (a, b) {
                    (0, 0) => format!("({})*l^2*(x1^2 + x2^2 + x3^2)/x0^4", sg),
                    (0, i) | (i, 0) => format!("-({})*l^2*x{}/x0^3", sg, i),
                    (i, j) => format!("({})*{}*l^2/x0^2", sg, delta(i, j)),
                }),
                sym2(false, |a, b| format!("x0^2*x{}*x{}/l^4", a, b)),
            )
        }
        "G'" | "EG'" => {
            let sg = if name == "G'" { -1 } else { 1 };
            (
                if sg < 0 { "para-Galilei" } else { "Euclidean para-Galilei" },
                "g'",
                if sg < 0 { "(-;+,+,+)" } else { "(+;+,+,+)" },
                partials(1..4),
                // ε l² (d(l/x0))²
                sym2(true, move |a, b| if a == 0 && b == 0 { format!("({})*l^4/x0^4", sg) } else { e("0") }),
                // (x0/l)² δ^{ij}
                sym2(false, |a, b| if a > 0 && a == b { e("x0^2/l^2") } else { e("0") }),
            )
        }
        _ => unreachable!(),
    };
    let conn = conn(|l, a, b| match (l, a, b) {
        (0, 0, 0) => e("-2/x0"),
        (i, 0, j) if i > 0 && i == j => e("-1/x0"),
        _ => e("0"),
    });
    finish(Row {
        name,
        title,
        algebra,
        g,
        h,
        conn,
        domain: vec![pos("x0^2")],
        signature: sig,
        curvature: q(0),
        free: vec![],
        kernel,
    })
}

/// Build one of the 45 catalog geometries by name.
pub fn geometry_row(name: &str) -> Option<Geometry> {
    let n = canonical_geometry_name(name)?;
    Some(match n {
        "Riem" | "Lob" | "LBdS" | "dS" | "BdSL" | "AdS" | "DTdS" => riem_family(n),
        "Euc" | "Min" | "G" | "EG" | "C" | "EC" => flat(n),
        "E_2" | "E_2-" | "P_2+" | "P_2-" | "EP_2-" | "DTP_2+" => cone_family(n),
        "NH_+" | "NH_-" | "ENH_+" | "ENH_-" | "NH_+'" | "ENH_+'" => nh_family(n),
        "NH_2" | "NH_2'" | "ENH_2" | "DTNH_2" | "G_2" | "EG_2" | "G_2'" | "EG_2'" => nh2_family(n),
        "HN_+" | "HN_-" | "EHN_+" | "EHN_-" | "HN_-'" | "DTHN" => hn_family(n),
        "E'" | "P'" | "C_2" | "EC_2" | "G'" | "EG'" => dual_family(n),
        _ => unreachable!(),
    })
}

