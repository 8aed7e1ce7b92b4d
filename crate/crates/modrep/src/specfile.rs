//! Representation spec files (JSON, `"version": 1`).
//!
//! ```json
//! {
//!   "version": 1,
//!   "field": { "p": 5, "k": 2 },
//!   "group": "SL2:9",
//!   "module": "tensor(sym:1, twist:1(sym:1))",
//!   "options": { "seed": 0, "cap": 100000, "ext_degree": 1 }
//! }
//! ```
//!
//! `group` is a preset `"SL2:q"` or `{ "field": ..., "generators": [...] }`.
//! `module` is a constructor expression or `{ "generators": [...] }` with one
//! matrix per group generator. Matrices are lists of rows; an entry is an
//! integer (reduced mod p) or a list of coefficients over the prime field,
//! constant term first. `field` is the coefficient field of the module and
//! defaults to the group's field; `ext_degree` enlarges it to
//! `F_{p^(k * ext_degree)}`.

use std::fmt;
use std::sync::Arc;

use modrep_core::grp::{close_group, sl2_generators, DEFAULT_CAP};
use modrep_core::{Elem, Field, GroupTable, Mat, Rep};
use serde::Deserialize;

use crate::expr::{self, EvalError, Expr, ParseError};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub k: u32,
    /// Monic modulus, constant term first; the default is the least
    /// irreducible polynomial.
    #[serde(default)]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Coeffs(Vec<u32>),
}

pub type MatSpec = Vec<Vec<Entry>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generators {
    pub field: FieldSpec,
    pub generators: Vec<MatSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset(String),
    Explicit(Generators),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleGens {
    pub generators: Vec<MatSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Expr(String),
    Explicit(ModuleGens),
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub seed: Option<u64>,
    pub cap: Option<usize>,
    pub ext_degree: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpecFile {
    pub version: u32,
    #[serde(default)]
    pub field: Option<FieldSpec>,
    pub group: GroupSpec,
    pub module: ModuleSpec,
    #[serde(default)]
    pub options: Options,
}

/// 1-based position in the spec file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug)]
pub enum SpecError {
    Io(std::io::Error),
    Syntax { at: Location, message: String },
    Expr { at: Option<Location>, error: ParseError },
    Eval { at: Option<Location>, error: EvalError },
    Invalid(String),
    Core(modrep_core::Error),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let loc = |at: &Option<Location>| at.map(|l| format!("line {}, column {}: ", l.line, l.column)).unwrap_or_default();
        match self {
            SpecError::Io(e) => write!(f, "cannot read spec: {e}"),
            SpecError::Syntax { at, message } => write!(f, "line {}, column {}: {message}", at.line, at.column),
            SpecError::Expr { at, error } => write!(f, "{}{}", loc(at), error.message),
            SpecError::Eval { at, error } => write!(f, "{}{}", loc(at), error.source),
            SpecError::Invalid(m) => write!(f, "invalid spec: {m}"),
            SpecError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpecError {}

impl From<modrep_core::Error> for SpecError {
    fn from(e: modrep_core::Error) -> Self {
        SpecError::Core(e)
    }
}

/// Command-line overrides of the file's options.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub cap: Option<usize>,
    pub ext_degree: Option<u32>,
}

/// A spec file resolved to a group and a representation.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub group: Arc<GroupTable>,
    pub target: Field,
    pub rep: Rep,
    pub seed: u64,
    pub cap: usize,
}

pub fn make_field(spec: &FieldSpec) -> Result<Field, SpecError> {
    Ok(match &spec.modulus {
        Some(m) => {
            if m.len() != spec.k as usize + 1 {
                return Err(SpecError::Invalid(format!("modulus must have {} coefficients", spec.k + 1)));
            }
            Field::with_modulus(spec.p, m)?
        }
        None => Field::make(spec.p, spec.k)?,
    })
}

fn entry(f: &Field, e: &Entry) -> Result<Elem, SpecError> {
    match e {
        Entry::Int(n) => Ok(f.from_int(*n)),
        Entry::Coeffs(c) => Ok(f.from_coeffs(c)?),
    }
}

pub fn make_matrix(f: &Field, m: &MatSpec) -> Result<Mat, SpecError> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|e| entry(f, e)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err(SpecError::Invalid("matrices must be square and non-empty".into()));
    }
    Ok(Mat::from_rows(f, &rows)?)
}

/// Field and generator matrices of a `{ field, generators }` block.
pub fn make_generators(g: &Generators) -> Result<(Field, Vec<Mat>), SpecError> {
    let f = make_field(&g.field)?;
    let gens = g.generators.iter().map(|m| make_matrix(&f, m)).collect::<Result<Vec<_>, _>>()?;
    Ok((f, gens))
}

/// `q` as `(p, k)` with `q = p^k`.
fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let p32 = u32::try_from(p).ok()?;
    let (mut r, mut k) = (q, 0u32);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p32, k))
}

fn preset(name: &str, cap: usize) -> Result<GroupTable, SpecError> {
    let q = name
        .strip_prefix("SL2:")
        .and_then(|q| q.trim().parse::<u64>().ok())
        .ok_or_else(|| SpecError::Invalid(format!("unknown group preset {name:?}; expected \"SL2:q\"")))?;
    let (p, k) = prime_power(q).ok_or_else(|| SpecError::Invalid(format!("{q} is not a prime power")))?;
    let f = Field::make(p, k)?;
    Ok(close_group(&sl2_generators(&f), cap)?)
}

/// Line and column of byte `offset` in `text`.
pub fn locate(text: &str, offset: usize) -> Location {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Location { line, column }
}

/// Byte offset in `text` of the first character of the string value of
/// `"module"`, when that string contains no escapes.
fn module_string_offset(text: &str, value: &str) -> Option<usize> {
    let key = text.find("\"module\"")?;
    let rest = &text[key + 8..];
    let colon = rest.find(':')?;
    let after = &rest[colon + 1..];
    let quote = after.find('"')?;
    let start = key + 8 + colon + 1 + quote + 1;
    text[start..].starts_with(value).then_some(start)
}

/// Parse spec text without building anything.
pub fn parse_spec(text: &str) -> Result<RepSpecFile, SpecError> {
    let spec: RepSpecFile = serde_json::from_str(text)
        .map_err(|e| SpecError::Syntax { at: Location { line: e.line(), column: e.column() }, message: e.to_string() })?;
    if spec.version != VERSION {
        return Err(SpecError::Invalid(format!("unsupported version {}; expected {VERSION}", spec.version)));
    }
    Ok(spec)
}

/// Parse an expression from the spec file, mapping errors into the file.
fn parse_module_expr(text: &str, src: &str) -> Result<(Expr, Option<usize>), SpecError> {
    let base = module_string_offset(text, src);
    let at = |off: usize| base.map(|b| locate(text, b + off));
    expr::parse(src).map(|e| (e, base)).map_err(|error| SpecError::Expr { at: at(error.offset), error })
}

/// Resolve spec text into a representation.
pub fn load_str(text: &str, ov: Overrides) -> Result<Loaded, SpecError> {
    let spec = parse_spec(text)?;
    let cap = ov.cap.or(spec.options.cap).unwrap_or(DEFAULT_CAP);
    let seed = ov.seed.or(spec.options.seed).unwrap_or(0);
    let ext_degree = ov.ext_degree.or(spec.options.ext_degree).unwrap_or(1);
    if ext_degree == 0 {
        return Err(SpecError::Invalid("ext_degree must be at least 1".into()));
    }
    let group = Arc::new(match &spec.group {
        GroupSpec::Preset(name) => preset(name, cap)?,
        GroupSpec::Explicit(g) => {
            let (_, gens) = make_generators(g)?;
            close_group(&gens, cap)?
        }
    });
    let base = match &spec.field {
        Some(fs) => make_field(fs)?,
        None => group.field().clone(),
    };
    if base.p() != group.field().p() && matches!(spec.module, ModuleSpec::Expr(_)) {
        return Err(SpecError::Invalid("constructor expressions need the group's characteristic".into()));
    }
    let target = if ext_degree == 1 { base } else { Field::make(base.p(), base.k() * ext_degree)? };
    let rep = match &spec.module {
        ModuleSpec::Expr(src) => {
            let (e, off) = parse_module_expr(text, src)?;
            e.eval(&group, &target)
                .map_err(|error| SpecError::Eval { at: off.map(|b| locate(text, b + error.offset)), error })?
        }
        ModuleSpec::Explicit(m) => {
            if ext_degree != 1 {
                return Err(SpecError::Invalid("ext_degree applies to constructor expressions only".into()));
            }
            let gens = m.generators.iter().map(|g| make_matrix(&target, g)).collect::<Result<Vec<_>, _>>()?;
            Rep::from_generators(&group, &target, gens)?
        }
    };
    Ok(Loaded { group, target, rep, seed, cap })
}

pub fn load_path(path: &std::path::Path, ov: Overrides) -> Result<Loaded, SpecError> {
    let text = std::fs::read_to_string(path).map_err(SpecError::Io)?;
    load_str(&text, ov)
}

/// Evaluate a further expression against an already loaded spec.
pub fn eval_extra(loaded: &Loaded, src: &str) -> Result<Rep, SpecError> {
    let e = expr::parse(src).map_err(|error| SpecError::Expr { at: None, error })?;
    e.eval(&loaded.group, &loaded.target).map_err(|error| SpecError::Eval { at: None, error })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn locations_are_one_based() {
        let t = "ab\ncde\nf";
        assert_eq!(locate(t, 0), Location { line: 1, column: 1 });
        assert_eq!(locate(t, 4), Location { line: 2, column: 2 });
        assert_eq!(locate(t, 7), Location { line: 3, column: 1 });
    }

    #[test]
    fn expression_errors_point_into_the_file() {
        let text = "{\"version\": 1,\n \"group\": \"SL2:5\",\n \"module\": \"dual(sym:1\"}";
        match load_str(text, Overrides::default()) {
            Err(SpecError::Expr { at: Some(at), .. }) => assert_eq!(at, Location { line: 3, column: 23 }),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let text = "{\"version\": 1,\n \"group\": SL2}";
        match load_str(text, Overrides::default()) {
            Err(SpecError::Syntax { at, .. }) => assert_eq!(at.line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn explicit_generators_and_extension_fields() {
        let text = r#"{"version": 1,
            "group": {"field": {"p": 3}, "generators": [[[1,1],[0,1]], [[0,-1],[1,0]]]},
            "field": {"p": 3, "k": 2},
            "module": {"generators": [[[[1,0],[1]],[0,1]], [[0,-1],[1,0]]]}}"#;
        let l = load_str(text, Overrides::default()).unwrap();
        assert_eq!((l.group.len(), l.rep.dim(), l.target.order()), (24, 2, 9));
        let bad = text.replace("[[[1,0],[1]],[0,1]]", "[[1,0],[0,-1]]");
        assert!(matches!(load_str(&bad, Overrides::default()), Err(SpecError::Core(_))));
    }

    #[test]
    fn ext_degree_enlarges_the_field() {
        let text = r#"{"version": 1, "group": "SL2:5", "module": "sym:2", "options": {"ext_degree": 2}}"#;
        let l = load_str(text, Overrides::default()).unwrap();
        assert_eq!(l.target.order(), 25);
        let l = load_str(text, Overrides { ext_degree: Some(1), ..Default::default() }).unwrap();
        assert_eq!(l.target.order(), 5);
    }
}
