//! The verification workspace: the built-in catalog plus any user spec
//! documents, optionally with one deliberately corrupted entry.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{build_algebra, build_geometry, builtin_recipes, ALGEBRAS, DUALITY_PAIRS, GEOMETRY_NAMES};
use crate::contraction::{ContractionRecipe, Expectation, Resolver, Scale, Subject};
use crate::exactnum::{q, rf, RationalFn, DEFAULT_SEED};
use crate::geometry::{
    fit_curvature, sample_domain, signature_rank, Connection, DomainCond, Geometry, SignatureDescriptor, TensorField,
};
use crate::liefields::{AlgebraPresentation, VectorField};

use super::spec::{Block, Declaration, NameTable, SpecDocument, SpecError, TensorName};
use crate::catalog::family;

/// An algebra with its provenance.
#[derive(Clone, Debug)]
pub struct AlgebraEntry {
    pub algebra: AlgebraPresentation,
    /// One of the ten kinematical algebras with parity and time-reversal.
    pub kinematical: bool,
    pub builtin: bool,
}

#[derive(Clone, Debug)]
pub struct GeometryEntry {
    pub geometry: Geometry,
    pub builtin: bool,
}

/// A duality pair with owned names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityEntry {
    pub left: String,
    pub right: String,
    pub g_sign: i8,
    pub h_sign: i8,
}

impl DualityEntry {
    pub fn label(&self) -> String {
        format!("{} <-> {}", self.left, self.right)
    }
}

/// A fault injected into an otherwise pristine catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// One boost generator multiplied by `x1`: the basis no longer closes.
    Algebra(String),
    /// `x0` added to `Γ⁰₀₀`.
    Geometry(String),
    /// Contraction edge `SRC->DST`: its target is swapped for another entry
    /// (or, for a blocked edge, the expectation is flipped).
    Recipe(String, String),
    /// The `g` sign of a duality pair (named by either side) is flipped.
    Duality(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WorkspaceError {
    #[error("{file}: {error}")]
    Spec { file: String, error: SpecError },
    #[error("invalid fault injection {0:?}: expected algebra:NAME, geometry:NAME, recipe:SRC->DST or duality:NAME")]
    BadInjection(String),
    #[error("fault injection target {0:?} not found")]
    InjectionTarget(String),
}

impl std::str::FromStr for Corruption {
    type Err = WorkspaceError;

    fn from_str(s: &str) -> Result<Corruption, WorkspaceError> {
        let bad = || WorkspaceError::BadInjection(s.to_string());
        let (kind, name) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "algebra" => Ok(Corruption::Algebra(name.to_string())),
            "geometry" => Ok(Corruption::Geometry(name.to_string())),
            "duality" => Ok(Corruption::Duality(name.to_string())),
            "recipe" => {
                let (a, b) = name.split_once("->").ok_or_else(bad)?;
                Ok(Corruption::Recipe(a.trim().to_string(), b.trim().to_string()))
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Workspace {
    pub algebras: Vec<AlgebraEntry>,
    pub geometries: Vec<GeometryEntry>,
    pub recipes: Vec<ContractionRecipe>,
    pub dualities: Vec<DualityEntry>,
    pub names: NameTable,
    /// Number of merged user declarations.
    pub user_declarations: usize,
    pub corruptions: Vec<String>,
    algebra_index: BTreeMap<String, usize>,
    geometry_index: BTreeMap<String, usize>,
}

impl Workspace {
    /// The pristine built-in catalog.
    pub fn builtin() -> Workspace {
        let algebras: Vec<AlgebraEntry> = ALGEBRAS
            .iter()
            .map(|r| AlgebraEntry {
                algebra: build_algebra(r.name).expect("catalog algebra"),
                kinematical: r.bll,
                builtin: true,
            })
            .collect();
        let geometries: Vec<GeometryEntry> = GEOMETRY_NAMES
            .par_iter()
            .map(|n| GeometryEntry { geometry: build_geometry(n).expect("catalog geometry"), builtin: true })
            .collect();
        let dualities = DUALITY_PAIRS
            .iter()
            .map(|p| DualityEntry { left: p.left.into(), right: p.right.into(), g_sign: p.g_sign, h_sign: p.h_sign })
            .collect();
        let mut ws = Workspace {
            algebras,
            geometries,
            recipes: builtin_recipes(),
            dualities,
            names: NameTable::builtin(),
            user_declarations: 0,
            corruptions: vec![],
            algebra_index: BTreeMap::new(),
            geometry_index: BTreeMap::new(),
        };
        ws.reindex();
        ws
    }

    fn reindex(&mut self) {
        self.algebra_index = self.algebras.iter().enumerate().map(|(i, a)| (a.algebra.name.clone(), i)).collect();
        self.geometry_index = self.geometries.iter().enumerate().map(|(i, g)| (g.geometry.name.clone(), i)).collect();
    }

    /// Canonical name and kind of any visible algebra or geometry.
    pub fn resolve(&self, name: &str) -> Option<(String, Subject)> {
        self.names.resolve(name)
    }

    pub fn algebra_entry(&self, name: &str) -> Option<&AlgebraEntry> {
        let (n, _) = self.resolve(name)?;
        self.algebra_index.get(&n).map(|&i| &self.algebras[i])
    }

    pub fn geometry_entry(&self, name: &str) -> Option<&GeometryEntry> {
        let (n, _) = self.resolve(name)?;
        self.geometry_index.get(&n).map(|&i| &self.geometries[i])
    }

    /// Parse `text` against the names visible so far and merge it.
    pub fn load_spec(&mut self, file: &str, text: &str) -> Result<(), WorkspaceError> {
        let doc = super::spec::parse_spec_with(text, &self.names)
            .map_err(|error| WorkspaceError::Spec { file: file.to_string(), error })?;
        self.merge(&doc);
        Ok(())
    }

    /// Add a document parsed against this workspace's names.
    pub fn merge(&mut self, doc: &SpecDocument) {
        for d in &doc.declarations {
            self.user_declarations += 1;
            match d {
                Declaration::Algebra(a) => {
                    self.algebras.push(AlgebraEntry { algebra: build_user_algebra(a), kinematical: false, builtin: false });
                    self.names.insert(&a.name, Subject::Algebra);
                }
                Declaration::Geometry(g) => {
                    self.geometries.push(GeometryEntry { geometry: build_user_geometry(g), builtin: false });
                    self.names.insert(&g.name, Subject::Geometry);
                }
                Declaration::Contract(c) => {
                    let mut r = match c.subject {
                        Subject::Algebra => ContractionRecipe::algebra(&c.source, &c.target, c.rule, c.pre, [Scale::ONE; 3]),
                        Subject::Geometry => ContractionRecipe::geometry(&c.source, &c.target, c.rule, [Scale::ONE; 3]),
                    };
                    for &(k, s) in &c.scales {
                        if k < 4 {
                            r.generator_scales[k] = s;
                        } else {
                            r.tensor_scales[k - 4] = s;
                        }
                    }
                    r.expected = c.expected;
                    self.recipes.push(r);
                }
                Declaration::Dual(d) => self.dualities.push(DualityEntry {
                    left: d.left.clone(),
                    right: d.right.clone(),
                    g_sign: d.g_sign,
                    h_sign: d.h_sign,
                }),
            }
        }
        self.reindex();
    }

    /// Inject one fault.
    pub fn corrupt(&mut self, c: &Corruption) -> Result<(), WorkspaceError> {
        let missing = |n: &str| WorkspaceError::InjectionTarget(n.to_string());
        match c {
            Corruption::Algebra(n) => {
                let (name, _) = self.resolve(n).ok_or_else(|| missing(n))?;
                let i = *self.algebra_index.get(&name).ok_or_else(|| missing(n))?;
                let b = &mut self.algebras[i].algebra.basis[4];
                *b = b.mul_poly(&crate::catalog::poly("x1"));
                self.corruptions.push(format!("algebra {}: boost slot 1 multiplied by x1", name));
            }
            Corruption::Geometry(n) => {
                let (name, _) = self.resolve(n).ok_or_else(|| missing(n))?;
                let i = *self.geometry_index.get(&name).ok_or_else(|| missing(n))?;
                let conn = &mut self.geometries[i].geometry.conn;
                let v = conn.get(0, 0, 0).add(&rf("x0"));
                conn.set(0, 0, 0, v);
                self.corruptions.push(format!("geometry {}: x0 added to Gamma[0][0][0]", name));
            }
            Corruption::Recipe(a, b) => {
                let (src, kind) = self.resolve(a).ok_or_else(|| missing(a))?;
                let (dst, _) = self.resolve(b).ok_or_else(|| missing(b))?;
                let r = self
                    .recipes
                    .iter_mut()
                    .find(|r| r.source == src && r.target == dst)
                    .ok_or_else(|| missing(&format!("{}->{}", a, b)))?;
                if r.expected == Expectation::NotContractible {
                    r.expected = Expectation::Contracts;
                    self.corruptions.push(format!("recipe {}: expectation flipped to contracts", r.label()));
                } else {
                    let (x, y) = if kind == Subject::Algebra { ("e", "p") } else { ("Euc", "Min") };
                    let label = r.label();
                    r.target = if r.target == x { y.to_string() } else { x.to_string() };
                    self.corruptions.push(format!("recipe {}: target replaced by {}", label, r.target));
                }
            }
            Corruption::Duality(n) => {
                let (name, _) = self.resolve(n).ok_or_else(|| missing(n))?;
                let d = self
                    .dualities
                    .iter_mut()
                    .find(|d| d.left == name || d.right == name)
                    .ok_or_else(|| missing(n))?;
                d.g_sign = -d.g_sign;
                self.corruptions.push(format!("duality {}: g sign flipped", d.label()));
            }
        }
        Ok(())
    }
}

impl Resolver for Workspace {
    fn algebra(&self, name: &str) -> Option<AlgebraPresentation> {
        self.algebra_entry(name).map(|e| e.algebra.clone())
    }

    fn geometry(&self, name: &str) -> Option<Geometry> {
        self.geometry_entry(name).map(|e| e.geometry.clone())
    }
}

/// Assemble the ten basis fields of a declaration.
pub fn build_user_algebra(a: &super::spec::AlgebraDecl) -> AlgebraPresentation {
    let basis = a.blocks.iter().flat_map(block_fields).collect();
    let symbols = std::array::from_fn(|i| match &a.blocks[i] {
        Block::Family(s) => s.clone(),
        Block::Inline(_) => "expr".to_string(),
    });
    AlgebraPresentation { name: a.name.clone(), title: a.name.clone(), symbols, basis }
}

fn block_fields(b: &Block) -> Vec<VectorField> {
    match b {
        Block::Family(s) => family(s).expect("symbols are validated by the parser"),
        Block::Inline(fields) => fields
            .iter()
            .map(|f| VectorField::new(std::array::from_fn(|mu| f[mu].value.as_poly().expect("validated polynomial").clone())))
            .collect(),
    }
}

/// Assemble a geometry; undeclared signature and curvature are measured.
pub fn build_user_geometry(d: &super::spec::GeometryDecl) -> Geometry {
    let mut g: [[RationalFn; 4]; 4] = Default::default();
    let mut h: [[RationalFn; 4]; 4] = Default::default();
    let mut conn = Connection::zero();
    for c in &d.components {
        let v: RationalFn = c.value.value.clone();
        let (a, b) = (c.index[0], *c.index.last().expect("index"));
        match c.tensor {
            TensorName::G => {
                g[a][b] = v.clone();
                g[b][a] = v;
            }
            TensorName::H => {
                h[a][b] = v.clone();
                h[b][a] = v;
            }
            TensorName::Gamma => conn.set_sym(c.index[0], c.index[1], c.index[2], v),
        }
    }
    let (g, h) = (TensorField::from_matrix(g, true), TensorField::from_matrix(h, false));
    let domain = d
        .domain
        .iter()
        .map(|(e, pos)| if *pos { DomainCond::positive(e.value.clone()) } else { DomainCond::negative(e.value.clone()) })
        .collect();
    let placeholder = SignatureDescriptor::parse("(+,+,+,+)").expect("literal");
    let mut geo = Geometry {
        name: d.name.clone(),
        title: d.name.clone(),
        algebra: d.algebra.clone(),
        g,
        h,
        conn,
        domain,
        ranks: (4, 4),
        signature: d.signature.clone().unwrap_or(placeholder),
        free_parameters: d.free.iter().map(|e| e.value.clone()).collect(),
        curvature: d.curvature.clone().unwrap_or_else(|| q(0)),
        witness: None,
        g_kernel: d
            .kernel
            .iter()
            .filter_map(|f| {
                let comps: Option<Vec<_>> = f.iter().map(|e| e.value.as_poly().cloned()).collect();
                comps.map(|c| VectorField::new(c.try_into().expect("four components")))
            })
            .collect(),
    };
    let points = sample_domain(&geo, DEFAULT_SEED, 5).ok();
    if d.signature.is_none() {
        if let Some((_, sig)) = points.as_ref().and_then(|p| signature_rank(&geo, p).ok()) {
            geo.signature = sig;
        }
    }
    geo.ranks = geo.signature.ranks();
    if d.curvature.is_none() {
        geo.curvature = fit_curvature(&geo).unwrap_or_else(|| q(0));
    }
    geo.witness = points.and_then(|mut p| p.drain(..1).next());
    geo
}
