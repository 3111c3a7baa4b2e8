//! The built-in definitions: generator families, algebras, geometries,
//! contraction recipes and the duality, additivity and selection tables.

mod algebras;
mod generators;
mod geometries;
mod recipes;
mod tables;

use thiserror::Error;

use crate::geometry::Geometry;
use crate::liefields::AlgebraPresentation;

pub use algebras::{algebra_row, canonical_algebra_name, presentation, AlgebraRow, ALGEBRAS, STATIC_ALGEBRAS};
pub use geometries::{canonical_geometry_name, GEOMETRY_NAMES};
pub use tables::*;
pub use recipes::{algebra_recipes, builtin_recipes, geometry_recipes};
pub use generators::{family, generator, is_family_symbol, poly, FAMILY_SYMBOLS};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("algebra {0:?} is static and only meaningful with a central extension")]
    StaticExcluded(String),
    #[error("unknown geometry {0:?}")]
    UnknownGeometry(String),
}

/// Presentation of one of the 22 catalog algebras.
pub fn build_algebra(name: &str) -> Result<AlgebraPresentation, CatalogError> {
    if STATIC_ALGEBRAS.contains(&name) {
        return Err(CatalogError::StaticExcluded(name.to_string()));
    }
    let row = algebra_row(name).ok_or_else(|| CatalogError::UnknownAlgebra(name.to_string()))?;
    Ok(presentation(row.name, row.title, row.symbols).expect("catalog symbols are valid"))
}

/// One of the 45 catalog geometries.
pub fn build_geometry(name: &str) -> Result<Geometry, CatalogError> {
    geometries::geometry_row(name).ok_or_else(|| CatalogError::UnknownGeometry(name.to_string()))
}
