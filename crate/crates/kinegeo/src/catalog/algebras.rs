use super::generators::family;
use crate::liefields::AlgebraPresentation;

/// One row of the algebra table: name, title, generator symbol per block,
/// and whether the algebra is one of the ten non-static kinematical algebras
/// of the Bacry–Lévy-Leblond classification.
pub struct AlgebraRow {
    pub name: &'static str,
    pub title: &'static str,
    pub symbols: [&'static str; 4],
    pub bll: bool,
}

const fn row(name: &'static str, title: &'static str, symbols: [&'static str; 4], bll: bool) -> AlgebraRow {
    AlgebraRow { name, title, symbols, bll }
}

pub const ALGEBRAS: [AlgebraRow; 22] = [
    row("r", "Riemann", ["H-", "P+", "N", "J"], false),
    row("l", "Lobachevsky", ["H+", "P-", "N", "J"], false),
    row("e", "Euclid", ["H", "P", "N", "J"], false),
    row("e2", "second Euclid", ["-H'", "P'", "N", "J"], false),
    row("d_+", "de Sitter", ["H+", "P+", "K", "J"], true),
    row("d_-", "anti-de Sitter", ["H-", "P-", "K", "J"], true),
    row("p", "Poincare", ["H", "P", "K", "J"], true),
    row("p2", "second Poincare", ["H'", "P'", "K", "J"], false),
    row("n_+", "Newton-Hooke +", ["H+", "P", "Kg", "J"], true),
    row("n_+2", "second Newton-Hooke +", ["H+", "P'", "Kc", "J"], false),
    row("n_-", "Newton-Hooke -", ["H-", "P", "Kg", "J"], true),
    row("n_-2", "second Newton-Hooke -", ["-H-", "P'", "Kc", "J"], false),
    row("g", "Galilei", ["H", "P", "Kg", "J"], true),
    row("g2", "second Galilei", ["H'", "P'", "Kc", "J"], false),
    row("c", "Carroll", ["H", "P", "Kc", "J"], true),
    row("c2", "second Carroll", ["H'", "P'", "Kg", "J"], false),
    row("h_+", "Hooke-Newton +", ["H", "P+", "Kc", "J"], false),
    row("e'", "para-Euclid", ["H'", "P+", "Kg", "J"], true),
    row("h_-", "Hooke-Newton -", ["H", "P-", "Kc", "J"], false),
    row("p'", "para-Poincare", ["-H'", "P-", "Kg", "J"], true),
    row("g'", "para-Galilei", ["H'", "P", "Kg", "J"], true),
    row("g'2", "second para-Galilei", ["H", "P'", "Kc", "J"], false),
];

/// Rows of the table that are excluded (meaningful only with a central extension).
pub const STATIC_ALGEBRAS: [&str; 2] = ["s", "s2"];

/// Canonical spelling: underscores are optional (`d+` ≡ `d_+`).
pub fn canonical_algebra_name(name: &str) -> Option<&'static str> {
    let squash = |s: &str| s.replace('_', "");
    ALGEBRAS.iter().map(|r| r.name).find(|n| squash(n) == squash(name))
}

pub fn algebra_row(name: &str) -> Option<&'static AlgebraRow> {
    let n = canonical_algebra_name(name)?;
    ALGEBRAS.iter().find(|r| r.name == n)
}

/// Assemble a presentation from four block symbols.
pub fn presentation(name: &str, title: &str, symbols: [&str; 4]) -> Option<AlgebraPresentation> {
    let mut basis = Vec::with_capacity(10);
    for s in symbols {
        basis.extend(family(s)?);
    }
    if basis.len() != 10 {
        return None;
    }
    Some(AlgebraPresentation {
        name: name.to_string(),
        title: title.to_string(),
        symbols: symbols.map(String::from),
        basis,
    })
}
