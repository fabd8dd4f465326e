//! JSON file formats for objects, actions, pre-crossed modules and
//! morphisms. Every file this module writes parses back to the same bytes.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraAction, AlgebraKind, LinearMap, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::{FiniteGroup, GroupAction, GroupMorphism};
use crate::linalg::{Matrix, Vector};
use crate::peiffer::{Orientation, PeifferWord};
use crate::pxmod::{pcm_validate, Pcm, PxMorphism, SubPcm};
use crate::variety::{Algebras, Groups, Variety};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    pub variety: String,
    pub lie: bool,
    pub c: Vec<Vec<Vec<String>>>,
    #[serde(default = "default_algebra_name")]
    pub name: String,
}

fn default_algebra_name() -> String {
    "A".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectFile {
    Group(GroupFile),
    Algebra(AlgebraFile),
}

/// A nested object, either inline or as a path relative to the referring
/// file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(T),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub variety: String,
    #[serde(rename = "B")]
    pub b: Ref<ObjectFile>,
    #[serde(rename = "X")]
    pub x: Ref<ObjectFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    /// `lambda[b][x]` is `b·x`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<Vec<Vec<String>>>>,
    /// `rho[b][x]` is `x·b`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Vec<Vec<String>>>>,
}

/// Image indices (groups) or a `target × source` matrix (algebras).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapData {
    Indices(Vec<usize>),
    Matrix(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PcmFile {
    pub variety: String,
    #[serde(rename = "X")]
    pub x: Ref<ObjectFile>,
    #[serde(rename = "B")]
    pub b: Ref<ObjectFile>,
    pub delta: MapData,
    pub action: Ref<ActionFile>,
    #[serde(default = "default_pcm_name")]
    pub name: String,
}

fn default_pcm_name() -> String {
    "pcm".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source: Ref<PcmFile>,
    pub target: Ref<PcmFile>,
    pub map: MapData,
}

/// Any file this crate reads, distinguished by its fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyFile {
    Pcm(PcmFile),
    Morphism(MorphismFile),
    Action(ActionFile),
    Object(ObjectFile),
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::malformed(format!("JSON: {e}")))
}

pub fn read_file<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::malformed(format!("{}: {e}", path.display())))?;
    parse_json(&text)
}

/// Resolves a reference against the directory of the referring file.
pub fn resolve<T: Clone + for<'de> Deserialize<'de>>(r: &Ref<T>, base: &Path) -> Result<(T, PathBuf)> {
    match r {
        Ref::Inline(t) => Ok((t.clone(), base.to_path_buf())),
        Ref::Path(p) => {
            let path = base.join(p);
            let t = read_file(&path)?;
            let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
            Ok((t, dir))
        }
    }
}

fn scalars(field: FieldSpec, v: &[String]) -> Result<Vector> {
    v.iter().map(|s| field.parse_elem(s)).collect()
}

fn texts(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_text).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.data.iter().map(|r| texts(r)).collect()
}

fn tensor(field: FieldSpec, t: &[Vec<Vec<String>>]) -> Result<Vec<Vec<Vector>>> {
    t.iter().map(|r| r.iter().map(|v| scalars(field, v)).collect()).collect()
}

fn tensor_text(t: &[Vec<Vector>]) -> Vec<Vec<Vec<String>>> {
    t.iter().map(|r| r.iter().map(|v| texts(v)).collect()).collect()
}

/// Conversion between a backend and the file formats.
pub trait Codec: Variety {
    fn object_to_file(o: &Self::Object) -> ObjectFile;
    fn object_from_file(f: &ObjectFile) -> Result<Self::Object>;
    fn map_to_data(m: &Self::Map) -> MapData;
    fn map_from_data(src: &Self::Object, tgt: &Self::Object, d: &MapData) -> Result<Self::Map>;
    fn action_payload(a: &Self::Action, f: &mut ActionFile);
    fn action_from_file(b: &Self::Object, x: &Self::Object, f: &ActionFile) -> Result<Self::Action>;
    fn elem_json(o: &Self::Object, e: &Self::Elem) -> serde_json::Value;
    fn sub_json(o: &Self::Object, s: &Self::Sub) -> serde_json::Value;
}

impl Codec for Groups {
    fn object_to_file(o: &Arc<FiniteGroup>) -> ObjectFile {
        ObjectFile::Group(GroupFile {
            order: o.order(),
            mult: o.table().to_vec(),
            name: o.name().to_string(),
        })
    }

    fn object_from_file(f: &ObjectFile) -> Result<Arc<FiniteGroup>> {
        match f {
            ObjectFile::Group(g) => {
                if g.mult.len() != g.order {
                    return Err(Error::malformed(format!(
                        "order {} but the table has {} rows",
                        g.order,
                        g.mult.len()
                    )));
                }
                FiniteGroup::new(g.name.clone(), g.mult.clone())
            }
            ObjectFile::Algebra(_) => Err(Error::mismatch("expected a group, found an algebra")),
        }
    }

    fn map_to_data(m: &GroupMorphism) -> MapData {
        MapData::Indices(m.map.clone())
    }

    fn map_from_data(src: &Arc<FiniteGroup>, tgt: &Arc<FiniteGroup>, d: &MapData) -> Result<GroupMorphism> {
        match d {
            MapData::Indices(v) => GroupMorphism::new(src.clone(), tgt.clone(), v.clone()),
            MapData::Matrix(_) => Err(Error::malformed("group maps are index arrays")),
        }
    }

    fn action_payload(a: &GroupAction, f: &mut ActionFile) {
        f.table = Some(a.table.clone());
    }

    fn action_from_file(b: &Arc<FiniteGroup>, x: &Arc<FiniteGroup>, f: &ActionFile) -> Result<GroupAction> {
        let table = f.table.clone().ok_or_else(|| Error::malformed("group action needs a table"))?;
        if table.len() != b.order() || table.iter().any(|r| r.len() != x.order()) {
            return Err(Error::malformed(format!("action table must be {}x{}", b.order(), x.order())));
        }
        if table.iter().flatten().any(|&v| v >= x.order()) {
            return Err(Error::malformed("action table entry out of range"));
        }
        GroupAction::new(b.clone(), x.clone(), table)
    }

    fn elem_json(_: &Arc<FiniteGroup>, e: &usize) -> serde_json::Value {
        serde_json::json!(e)
    }

    fn sub_json(_: &Arc<FiniteGroup>, s: &crate::group::ElementSet) -> serde_json::Value {
        serde_json::json!(s.elements())
    }
}

impl Codec for Algebras {
    fn object_to_file(o: &Arc<StructAlgebra>) -> ObjectFile {
        ObjectFile::Algebra(AlgebraFile {
            field: o.field().name(),
            dim: o.dim(),
            variety: o.kind().tag().into(),
            lie: o.is_lie(),
            c: tensor_text(o.constants()),
            name: o.name().to_string(),
        })
    }

    fn object_from_file(f: &ObjectFile) -> Result<Arc<StructAlgebra>> {
        match f {
            ObjectFile::Algebra(a) => {
                let field = FieldSpec::parse(&a.field)?;
                let kind = AlgebraKind::parse(&a.variety)?;
                if a.c.len() != a.dim {
                    return Err(Error::malformed(format!("dim {} but c has {} slices", a.dim, a.c.len())));
                }
                StructAlgebra::new(a.name.clone(), field, kind, a.lie, tensor(field, &a.c)?)
            }
            ObjectFile::Group(_) => Err(Error::mismatch("expected an algebra, found a group")),
        }
    }

    fn map_to_data(m: &LinearMap) -> MapData {
        MapData::Matrix(matrix_rows(&m.matrix))
    }

    fn map_from_data(src: &Arc<StructAlgebra>, tgt: &Arc<StructAlgebra>, d: &MapData) -> Result<LinearMap> {
        let field = src.field();
        let rows: Vec<Vector> = match d {
            MapData::Matrix(rows) => rows.iter().map(|r| scalars(field, r)).collect::<Result<_>>()?,
            MapData::Indices(v) if v.is_empty() => Vec::new(),
            MapData::Indices(_) => return Err(Error::malformed("algebra maps are matrices of field elements")),
        };
        if rows.len() != tgt.dim() || rows.iter().any(|r| r.len() != src.dim()) {
            return Err(Error::malformed(format!("map matrix must be {}x{}", tgt.dim(), src.dim())));
        }
        let matrix = Matrix {
            field,
            rows: tgt.dim(),
            cols: src.dim(),
            data: rows,
        };
        LinearMap::new(src.clone(), tgt.clone(), matrix)
    }

    fn action_payload(a: &AlgebraAction, f: &mut ActionFile) {
        f.lambda = Some(tensor_text(&a.left));
        f.rho = Some(tensor_text(&a.right));
    }

    fn action_from_file(b: &Arc<StructAlgebra>, x: &Arc<StructAlgebra>, f: &ActionFile) -> Result<AlgebraAction> {
        let (Some(l), Some(r)) = (&f.lambda, &f.rho) else {
            return Err(Error::malformed("algebra action needs lambda and rho"));
        };
        let field = x.field();
        AlgebraAction::new(b.clone(), x.clone(), tensor(field, l)?, tensor(field, r)?)
    }

    fn elem_json(_: &Arc<StructAlgebra>, e: &Vector) -> serde_json::Value {
        serde_json::json!(texts(e))
    }

    fn sub_json(_: &Arc<StructAlgebra>, s: &crate::linalg::Subspace) -> serde_json::Value {
        serde_json::json!(s.basis().iter().map(|v| texts(v)).collect::<Vec<_>>())
    }
}

fn variety_tag(f: &ObjectFile) -> String {
    match f {
        ObjectFile::Group(_) => "group".into(),
        ObjectFile::Algebra(a) => a.variety.clone(),
    }
}

pub fn action_to_file<V: Codec>(a: &V::Action) -> ActionFile {
    let mut f = ActionFile {
        variety: V::tag(&V::acted(a)).into(),
        b: Ref::Inline(V::object_to_file(&V::acting(a))),
        x: Ref::Inline(V::object_to_file(&V::acted(a))),
        table: None,
        lambda: None,
        rho: None,
    };
    V::action_payload(a, &mut f);
    f
}

pub fn pcm_to_file<V: Codec>(p: &Pcm<V>) -> PcmFile {
    PcmFile {
        variety: V::tag(&p.x).into(),
        x: Ref::Inline(V::object_to_file(&p.x)),
        b: Ref::Inline(V::object_to_file(&p.b)),
        delta: V::map_to_data(&p.delta),
        action: Ref::Inline(action_to_file::<V>(&p.xi)),
        name: p.name.clone(),
    }
}

pub fn morphism_to_file<V: Codec>(m: &PxMorphism<V>) -> MorphismFile {
    MorphismFile {
        source: Ref::Inline(pcm_to_file(&m.source)),
        target: Ref::Inline(pcm_to_file(&m.target)),
        map: V::map_to_data(&m.map),
    }
}

fn check_tag(declared: &str, objects: &[&ObjectFile]) -> Result<()> {
    for o in objects {
        let t = variety_tag(o);
        if t != declared {
            return Err(Error::mismatch(format!("declared variety {declared} but found {t}")));
        }
    }
    Ok(())
}

pub fn action_from_file<V: Codec>(f: &ActionFile, base: &Path) -> Result<V::Action> {
    let (bf, _) = resolve(&f.b, base)?;
    let (xf, _) = resolve(&f.x, base)?;
    check_tag(&f.variety, &[&bf, &xf])?;
    let b = V::object_from_file(&bf)?;
    let x = V::object_from_file(&xf)?;
    V::action_from_file(&b, &x, f)
}

pub fn pcm_from_file<V: Codec>(f: &PcmFile, base: &Path) -> Result<Pcm<V>> {
    let (xf, _) = resolve(&f.x, base)?;
    let (bf, _) = resolve(&f.b, base)?;
    check_tag(&f.variety, &[&xf, &bf])?;
    let x = V::object_from_file(&xf)?;
    let b = V::object_from_file(&bf)?;
    let (af, adir) = resolve(&f.action, base)?;
    let xi = action_from_file::<V>(&af, &adir)?;
    if V::acting(&xi) != b || V::acted(&xi) != x {
        return Err(Error::mismatch("the action file refers to different objects than the module"));
    }
    let delta = V::map_from_data(&x, &b, &f.delta)?;
    pcm_validate(f.name.clone(), x, b, delta, xi)
}

pub fn morphism_from_file<V: Codec>(f: &MorphismFile, base: &Path) -> Result<PxMorphism<V>> {
    let (sf, sdir) = resolve(&f.source, base)?;
    let (tf, tdir) = resolve(&f.target, base)?;
    let s = pcm_from_file::<V>(&sf, &sdir)?;
    let t = pcm_from_file::<V>(&tf, &tdir)?;
    let map = V::map_from_data(&s.x, &t.x, &f.map)?;
    PxMorphism::new(s, t, map)
}

/// A pre-crossed module of either backend.
#[derive(Debug, Clone)]
pub enum AnyPcm {
    Group(Pcm<Groups>),
    Algebra(Pcm<Algebras>),
}

impl AnyPcm {
    pub fn name(&self) -> &str {
        match self {
            AnyPcm::Group(p) => &p.name,
            AnyPcm::Algebra(p) => &p.name,
        }
    }

    pub fn to_file(&self) -> PcmFile {
        match self {
            AnyPcm::Group(p) => pcm_to_file(p),
            AnyPcm::Algebra(p) => pcm_to_file(p),
        }
    }
}

pub fn load_pcm_file(f: &PcmFile, base: &Path) -> Result<AnyPcm> {
    if f.variety == "group" {
        pcm_from_file::<Groups>(f, base).map(AnyPcm::Group)
    } else {
        AlgebraKind::parse(&f.variety)?;
        pcm_from_file::<Algebras>(f, base).map(AnyPcm::Algebra)
    }
}

pub fn load_pcm(path: &Path) -> Result<AnyPcm> {
    let f: PcmFile = read_file(path)?;
    load_pcm_file(&f, path.parent().unwrap_or(Path::new(".")))
}

pub fn sub_to_json<V: Codec>(s: &SubPcm<V>) -> serde_json::Value {
    serde_json::json!({
        "size": s.size(),
        "elements": V::sub_json(&s.ambient.x, &s.sub),
    })
}

pub fn words_to_json<V: Codec>(o: &V::Object, words: &[PeifferWord<V>]) -> serde_json::Value {
    serde_json::Value::Array(
        words
            .iter()
            .map(|w| {
                serde_json::json!({
                    "x": V::elem_json(o, &w.x),
                    "y": V::elem_json(o, &w.y),
                    "orientation": match w.orientation {
                        Orientation::XonY => "x-on-y",
                        Orientation::YonX => "y-on-x",
                    },
                    "form": w.form,
                    "word": V::elem_json(o, &w.word),
                })
            })
            .collect(),
    )
}

/// Parses a list of elements: indices for groups, vectors of field elements
/// for algebras.
pub trait ElemParse: Variety {
    fn parse_elems(o: &Self::Object, v: &serde_json::Value) -> Result<Vec<Self::Elem>>;
}

impl ElemParse for Groups {
    fn parse_elems(o: &Arc<FiniteGroup>, v: &serde_json::Value) -> Result<Vec<usize>> {
        let xs: Vec<usize> = serde_json::from_value(v.clone()).map_err(|e| Error::malformed(format!("elements: {e}")))?;
        if let Some(&bad) = xs.iter().find(|&&x| x >= o.order()) {
            return Err(Error::malformed(format!("element {bad} out of range")));
        }
        Ok(xs)
    }
}

impl ElemParse for Algebras {
    fn parse_elems(o: &Arc<StructAlgebra>, v: &serde_json::Value) -> Result<Vec<Vector>> {
        let xs: Vec<Vec<String>> =
            serde_json::from_value(v.clone()).map_err(|e| Error::malformed(format!("vectors: {e}")))?;
        xs.iter()
            .map(|x| {
                if x.len() != o.dim() {
                    return Err(Error::malformed(format!("vector of length {} in dimension {}", x.len(), o.dim())));
                }
                scalars(o.field(), x)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instances::{algebra_catalog, group_catalog};

    #[test]
    fn catalog_round_trips_bit_exactly() {
        let base = Path::new(".");
        for p in group_catalog() {
            let text = to_json(&pcm_to_file(&p));
            let back = pcm_from_file::<Groups>(&parse_json(&text).unwrap(), base).unwrap();
            assert_eq!(back, p);
            assert_eq!(to_json(&pcm_to_file(&back)), text);
        }
        for p in algebra_catalog() {
            let text = to_json(&pcm_to_file(&p));
            let back = pcm_from_file::<Algebras>(&parse_json(&text).unwrap(), base).unwrap();
            assert_eq!(back, p);
            assert_eq!(to_json(&pcm_to_file(&back)), text);
        }
    }

    #[test]
    fn rationals_are_written_as_fractions() {
        let q = crate::catalog::algebras::nonabelian_lie2(FieldSpec::Rationals);
        let text = to_json(&Algebras::object_to_file(&q));
        assert!(text.contains("\"-1/1\"") && text.contains("\"0/1\""));
    }

    #[test]
    fn group_file_errors() {
        let bad: Result<ObjectFile> = parse_json("{\"order\": 2, \"mult\": [[0,1],[1,1]], \"name\": \"x\"}");
        let err = Groups::object_from_file(&bad.unwrap()).unwrap_err();
        assert_eq!(err, Error::axiom("inverse", "index 1 has no inverse"));
        assert!(parse_json::<ObjectFile>("{\"order\": 2").is_err());
    }
}
