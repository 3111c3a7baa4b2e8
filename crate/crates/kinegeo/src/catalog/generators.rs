//! The primitive generator families in the `x0 = ct` chart.
//!
//! Spatial indices are lowered with η, `x_i = −x^i`, which makes `K` a Lorentz
//! boost and `N` a Euclidean rotation in the (x0, x^i) plane.

use crate::exactnum::{rf, MultiPoly};
use crate::liefields::VectorField;

/// The thirteen primitive family symbols.
pub const FAMILY_SYMBOLS: [&str; 13] = ["H", "H'", "H+", "H-", "P", "P'", "P+", "P-", "K", "Kg", "Kc", "N", "J"];

fn field(src: [String; 4]) -> VectorField {
    VectorField::new(src.map(|s| {
        rf(&s).as_poly().cloned().unwrap_or_else(|| panic!("generator component {} is not polynomial", s))
    }))
}

fn dilation_times(prefix: &str) -> [String; 4] {
    std::array::from_fn(|mu| format!("{}*x{}", prefix, mu))
}

/// `H`-type generator (time translation family).
fn time_family(sym: &str) -> Option<VectorField> {
    let d: [String; 4] = match sym {
        "H" => ["c".into(), "0".into(), "0".into(), "0".into()],
        // H' = −ν² t D = −(c/l²) x0 D
        "H'" => dilation_times("-c*x0/l^2"),
        "H+" | "H-" => {
            let s = if sym == "H+" { "-" } else { "" };
            let mut d = dilation_times(&format!("{}c*x0/l^2", s));
            d[0] = format!("c + {}", d[0]);
            d
        }
        _ => return None,
    };
    Some(field(d))
}

/// Spatial-index families; `i` is 1-based.
fn indexed_family(sym: &str, i: usize) -> Option<VectorField> {
    let unit = |mu: usize| if mu == i { "1".to_string() } else { "0".to_string() };
    let d: [String; 4] = match sym {
        "P" => std::array::from_fn(unit),
        // P' = −l⁻² x_i D = l⁻² x^i D
        "P'" => dilation_times(&format!("x{}/l^2", i)),
        // P± = ∂_i ∓ l⁻² x_i D = ∂_i ± l⁻² x^i D
        "P+" | "P-" => {
            let s = if sym == "P+" { "" } else { "-" };
            let mut d = dilation_times(&format!("{}x{}/l^2", s, i));
            d[i] = format!("1 + {}", d[i]);
            d
        }
        // K = t∂_i − c⁻² x_i ∂_t = (x0 ∂_i + x^i ∂_0)/c
        "K" => std::array::from_fn(|mu| match mu {
            0 => format!("x{}/c", i),
            m if m == i => "x0/c".into(),
            _ => "0".into(),
        }),
        "Kg" => std::array::from_fn(|mu| if mu == i { "x0/c".into() } else { "0".into() }),
        "Kc" => std::array::from_fn(|mu| if mu == 0 { format!("x{}/c", i) } else { "0".into() }),
        // N = t∂_i + c⁻² x_i ∂_t = (x0 ∂_i − x^i ∂_0)/c
        "N" => std::array::from_fn(|mu| match mu {
            0 => format!("-x{}/c", i),
            m if m == i => "x0/c".into(),
            _ => "0".into(),
        }),
        // J_i = ½ ε_i^{jk}(x_j ∂_k − x_k ∂_j) = −ε_ijk x^j ∂_k, so [J1, J2] = J3.
        "J" => {
            let (j, k) = match i {
                1 => (2, 3),
                2 => (3, 1),
                _ => (1, 2),
            };
            std::array::from_fn(|mu| match mu {
                m if m == k => format!("-x{}", j),
                m if m == j => format!("x{}", k),
                _ => "0".into(),
            })
        }
        _ => return None,
    };
    Some(field(d))
}

/// Build generator `sym` (optionally prefixed by `-`); `i` is the 1-based
/// spatial index, ignored for the time families.
pub fn generator(sym: &str, i: usize) -> Option<VectorField> {
    if let Some(rest) = sym.strip_prefix('-') {
        return generator(rest, i).map(|x| x.neg());
    }
    if sym.starts_with('H') {
        time_family(sym)
    } else if (1..=3).contains(&i) {
        indexed_family(sym, i)
    } else {
        None
    }
}

pub fn is_family_symbol(sym: &str) -> bool {
    FAMILY_SYMBOLS.contains(&sym.strip_prefix('-').unwrap_or(sym))
}

/// The three fields of an indexed family (or the single time field).
pub fn family(sym: &str) -> Option<Vec<VectorField>> {
    if sym.trim_start_matches('-').starts_with('H') {
        generator(sym, 0).map(|x| vec![x])
    } else {
        (1..=3).map(|i| generator(sym, i)).collect()
    }
}


/// Polynomial helper for built-in tables.
pub fn poly(src: &str) -> MultiPoly {
    rf(src).as_poly().cloned().unwrap_or_else(|| panic!("{} is not polynomial", src))
}
