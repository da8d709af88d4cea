//! Self-describing JSON scenes: named algebras, bimodules, corings and comodules.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{field_algebra, Algebra};
use crate::bimodule::{Bimodule, Side};
use crate::comodule::{Bicomodule, Comodule};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

pub const SCENE_VERSION: u32 = 1;

/// Row-major integer matrix; entries are reduced modulo `p`.
pub type Rows = Vec<Vec<i64>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub version: u32,
    pub p: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default)]
    pub corings: BTreeMap<String, CoringSpec>,
    #[serde(default)]
    pub comodules: BTreeMap<String, ComoduleSpec>,
    #[serde(default)]
    pub bicomodules: BTreeMap<String, BicomoduleSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    /// `mul[i][j]` is the coordinate vector of `e_i e_j`.
    pub mul: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// A bimodule; a missing side is the base field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BimoduleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub left_actions: Vec<Rows>,
    #[serde(default)]
    pub right_actions: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoringSpec {
    pub algebra: String,
    pub carrier: String,
    pub delta_lift: Rows,
    pub counit: Rows,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComoduleSpec {
    pub coring: String,
    pub side: SideSpec,
    pub module: String,
    pub coaction_lift: Rows,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BicomoduleSpec {
    pub coring: String,
    pub carrier: String,
    pub left_coaction: Rows,
    pub right_coaction: Rows,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

impl From<SideSpec> for Side {
    fn from(s: SideSpec) -> Side {
        match s {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        }
    }
}

impl From<Side> for SideSpec {
    fn from(s: Side) -> SideSpec {
        match s {
            Side::Left => SideSpec::Left,
            Side::Right => SideSpec::Right,
        }
    }
}

fn reduce(f: PrimeField, x: i64) -> u64 {
    x.rem_euclid(f.p() as i64) as u64
}

fn vector(f: PrimeField, v: &[i64]) -> Vec<u64> {
    v.iter().map(|&x| reduce(f, x)).collect()
}

fn matrix(f: PrimeField, rows: &Rows, shape: (usize, usize), what: &str) -> Result<Matrix> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(Error::Scene(format!("{what} must be {}x{}", shape.0, shape.1)));
    }
    let data = rows.iter().flat_map(|r| vector(f, r)).collect();
    Matrix::new(f, shape.0, shape.1, data)
}

fn rows_of(m: &Matrix) -> Rows {
    m.to_rows().into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect()
}

fn signed(v: &[u64]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, kind: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::Scene(format!("unknown {kind} '{name}'")))
}

/// A scene whose references are resolved and whose objects have the right shapes.
#[derive(Clone, Debug, Default)]
pub struct Loaded {
    pub field: Option<PrimeField>,
    pub seed: u64,
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub bimodules: BTreeMap<String, Arc<Bimodule>>,
    pub corings: BTreeMap<String, Arc<Coring>>,
    pub comodules: BTreeMap<String, Arc<Comodule>>,
    pub bicomodules: BTreeMap<String, Bicomodule>,
}

impl Scene {
    pub fn from_json(text: &str) -> Result<Scene> {
        serde_json::from_str(text).map_err(|e| Error::Scene(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn new(field: PrimeField) -> Scene {
        Scene { version: SCENE_VERSION, p: field.p(), ..Scene::default() }
    }

    pub fn add_algebra(&mut self, name: &str, a: &Algebra) {
        let mul = a.structure_constants().iter().map(|r| r.iter().map(|v| signed(v)).collect()).collect();
        self.algebras.insert(
            name.into(),
            AlgebraSpec { mul, unit: signed(a.unit()), names: a.basis_names().map(<[String]>::to_vec) },
        );
    }

    /// `left` and `right` name the acting algebras; `None` stands for the base field.
    pub fn add_bimodule(&mut self, name: &str, m: &Bimodule, left: Option<&str>, right: Option<&str>) {
        self.bimodules.insert(
            name.into(),
            BimoduleSpec {
                left: left.map(str::to_string),
                right: right.map(str::to_string),
                dim: m.dim(),
                left_actions: if left.is_some() { m.left_actions().iter().map(rows_of).collect() } else { vec![] },
                right_actions: if right.is_some() { m.right_actions().iter().map(rows_of).collect() } else { vec![] },
            },
        );
    }

    /// Adds a coring together with its algebra and carrier, named `<name>.A` and `<name>.C`.
    pub fn add_coring(&mut self, name: &str, c: &Coring) {
        let a = format!("{name}.A");
        let m = format!("{name}.C");
        self.add_algebra(&a, c.algebra());
        self.add_bimodule(&m, c.carrier(), Some(&a), Some(&a));
        self.corings.insert(
            name.into(),
            CoringSpec { algebra: a, carrier: m, delta_lift: rows_of(c.delta_lift()), counit: rows_of(c.counit()) },
        );
    }

    /// Resolves references and builds every object, checking shapes but not axioms.
    pub fn load(&self) -> Result<Loaded> {
        if self.version != SCENE_VERSION {
            return Err(Error::Scene(format!("unsupported scene version {}", self.version)));
        }
        let f = PrimeField::new(self.p).map_err(|e| Error::Scene(e.to_string()))?;
        let mut out = Loaded { field: Some(f), seed: self.seed, ..Loaded::default() };
        let base = Arc::new(field_algebra(f));
        for (name, spec) in &self.algebras {
            let n = spec.unit.len();
            if spec.mul.len() != n || spec.mul.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
                return Err(Error::Scene(format!("algebra '{name}': structure constants must be {n}x{n}x{n}")));
            }
            let mul = spec.mul.iter().map(|r| r.iter().map(|v| vector(f, v)).collect()).collect();
            let mut a = Algebra::new_unchecked(f, mul, vector(f, &spec.unit))?;
            if let Some(names) = &spec.names {
                a = a.with_basis_names(names.clone())?;
            }
            out.algebras.insert(name.clone(), Arc::new(a));
        }
        let algebra = |name: &Option<String>| -> Result<Arc<Algebra>> {
            match name {
                None => Ok(base.clone()),
                Some(n) => lookup(&out.algebras, n, "algebra").cloned(),
            }
        };
        let mut bimodules = BTreeMap::new();
        for (name, spec) in &self.bimodules {
            let (l, r) = (algebra(&spec.left)?, algebra(&spec.right)?);
            let n = spec.dim;
            let acts = |list: &[Rows], side: &str| -> Result<Vec<Matrix>> {
                list.iter().map(|m| matrix(f, m, (n, n), &format!("bimodule '{name}' {side} action"))).collect()
            };
            let identity = || vec![Matrix::identity(f, n)];
            let la = if spec.left.is_none() && spec.left_actions.is_empty() { identity() } else { acts(&spec.left_actions, "left")? };
            let ra =
                if spec.right.is_none() && spec.right_actions.is_empty() { identity() } else { acts(&spec.right_actions, "right")? };
            let m = Bimodule::new_unchecked(l, r, n, la, ra).map_err(|e| Error::Scene(format!("bimodule '{name}': {e}")))?;
            bimodules.insert(name.clone(), Arc::new(m));
        }
        out.bimodules = bimodules;
        for (name, spec) in &self.corings {
            let a = lookup(&out.algebras, &spec.algebra, "algebra")?.clone();
            let carrier = lookup(&out.bimodules, &spec.carrier, "bimodule")?.clone();
            let d = carrier.dim();
            let lift = matrix(f, &spec.delta_lift, (d * d, d), &format!("coring '{name}' delta_lift"))?;
            let counit = matrix(f, &spec.counit, (a.dim(), d), &format!("coring '{name}' counit"))?;
            let c = Coring::new_unchecked(a, carrier, lift, counit).map_err(|e| Error::Scene(format!("coring '{name}': {e}")))?;
            out.corings.insert(name.clone(), Arc::new(c));
        }
        for (name, spec) in &self.comodules {
            let c = lookup(&out.corings, &spec.coring, "coring")?.clone();
            let module = lookup(&out.bimodules, &spec.module, "bimodule")?.clone();
            let shape = (c.dim() * module.dim(), module.dim());
            let lift = matrix(f, &spec.coaction_lift, shape, &format!("comodule '{name}' coaction_lift"))?;
            let m = Comodule::new_unchecked(c, spec.side.into(), module, lift)
                .map_err(|e| Error::Scene(format!("comodule '{name}': {e}")))?;
            out.comodules.insert(name.clone(), Arc::new(m));
        }
        for (name, spec) in &self.bicomodules {
            let coring = lookup(&out.corings, &spec.coring, "coring")?.clone();
            let carrier = lookup(&out.bimodules, &spec.carrier, "bimodule")?.clone();
            let (d, n) = (coring.dim(), carrier.dim());
            let what = |s: &str| format!("bicomodule '{name}' {s}");
            let left_coaction = matrix(f, &spec.left_coaction, (d * n, n), &what("left_coaction"))?;
            let right_coaction = matrix(f, &spec.right_coaction, (d * n, n), &what("right_coaction"))?;
            if carrier.left_algebra() != coring.algebra() || carrier.right_algebra() != coring.algebra() {
                return Err(Error::Scene(what("carrier must be a bimodule over the coring's algebra")));
            }
            out.bicomodules.insert(name.clone(), Bicomodule { coring, carrier, left_coaction, right_coaction });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::diagonal_embedding;
    use crate::coring::sweedler_coring;

    #[test]
    fn round_trip() {
        let f = PrimeField::new(3).unwrap();
        let c = sweedler_coring(&diagonal_embedding(2, f)).unwrap();
        let mut s = Scene::new(f);
        s.add_coring("C", &c);
        let text = s.to_json();
        let back = Scene::from_json(&text).unwrap();
        assert_eq!(back, s);
        let loaded = back.load().unwrap();
        let c2 = &loaded.corings["C"];
        assert_eq!(c2.delta_lift(), c.delta_lift());
        assert!(c2.check().is_ok());
    }

    #[test]
    fn unresolved_reference() {
        let mut s = Scene::new(PrimeField::new(2).unwrap());
        s.corings.insert(
            "C".into(),
            CoringSpec { algebra: "missing".into(), carrier: "M".into(), delta_lift: vec![], counit: vec![] },
        );
        assert!(matches!(s.load(), Err(Error::Scene(_))));
    }
}
