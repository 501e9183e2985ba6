use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::liesuper::{LieSuperalgebra, Parity, RMatrix};
use crate::rep::GradedSpace;
use crate::scalar::{parse_rational, Rational, DEFAULT_TRUNCATION_ORDER};
use crate::ug::parse_word;

/// A selectable group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckGroup {
    Algebra,
    Cybe,
    Cocycle,
    Hopf,
    Qybe,
    Braid,
    Gauge,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 7] = [
        CheckGroup::Algebra,
        CheckGroup::Cybe,
        CheckGroup::Cocycle,
        CheckGroup::Hopf,
        CheckGroup::Qybe,
        CheckGroup::Braid,
        CheckGroup::Gauge,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckGroup::Algebra => "algebra",
            CheckGroup::Cybe => "cybe",
            CheckGroup::Cocycle => "cocycle",
            CheckGroup::Hopf => "hopf",
            CheckGroup::Qybe => "qybe",
            CheckGroup::Braid => "braid",
            CheckGroup::Gauge => "gauge",
        }
    }

    /// `"all"` expands to every group.
    pub fn parse_list(items: &[impl AsRef<str>]) -> Result<Vec<CheckGroup>> {
        let mut out = Vec::new();
        for item in items {
            for part in item.as_ref().split(',').map(str::trim).filter(|p| !p.is_empty()) {
                if part == "all" {
                    out.extend(CheckGroup::ALL);
                } else {
                    out.push(part.parse()?);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for CheckGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckGroup::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::parse("checks", format!("unknown check group `{s}`")))
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub truncation_order: usize,
    pub checks: Vec<CheckGroup>,
    pub allow_invalid_twist: bool,
}

/// `c h^order (left ⊗ right)` with both legs as words in the basis names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistTerm {
    pub order: usize,
    pub left: String,
    pub right: String,
    pub coeff: Rational,
}

/// `c h^order word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeTerm {
    pub order: usize,
    pub word: String,
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationSpec {
    pub space: GradedSpace,
    /// Rational matrix per basis element, in basis order.
    pub images: Vec<Vec<Vec<Rational>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectRMatrix {
    pub space: GradedSpace,
    /// `dim^2 x dim^2` entries, each a list of `h`-coefficients.
    pub entries: Vec<Vec<Vec<Rational>>>,
}

/// Validated contents of a spec file.
#[derive(Clone, Debug)]
pub struct SpecFile {
    pub settings: Settings,
    pub algebra: LieSuperalgebra,
    pub r_matrix: Option<RMatrix>,
    pub twist: Option<Vec<TwistTerm>>,
    /// `E = 1 + sum of terms`.
    pub gauge: Option<Vec<GaugeTerm>>,
    pub representation: Option<RepresentationSpec>,
    pub rmatrix_direct: Option<DirectRMatrix>,
    /// Hex SHA-256 of the input bytes.
    pub digest: String,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    settings: Option<RawSettings>,
    algebra: Option<RawAlgebra>,
    r_matrix: Option<RawRMatrix>,
    twist: Option<RawTwist>,
    gauge: Option<RawGauge>,
    representation: Option<RawRepresentation>,
    rmatrix_direct: Option<RawDirect>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawSettings {
    truncation_order: Option<usize>,
    checks: Option<Vec<String>>,
    allow_invalid_twist: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    #[serde(default)]
    basis: Vec<RawGenerator>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    name: String,
    parity: u8,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    x: String,
    y: String,
    result: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRMatrix {
    terms: Vec<(String, String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwist {
    terms: Vec<(usize, String, String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGauge {
    element: Vec<(usize, String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    even: usize,
    odd: usize,
    images: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Constant(String),
    Series(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDirect {
    even: usize,
    odd: usize,
    entries: Vec<Vec<RawEntry>>,
}

/// Reads and validates a spec file.
pub fn load_spec(path: impl AsRef<Path>) -> Result<SpecFile> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_spec(&text)
}

/// Validates spec-file text; see the repository README for the schema.
pub fn parse_spec(text: &str) -> Result<SpecFile> {
    let digest = hex::encode(Sha256::digest(text.as_bytes()));
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let message = e.message().to_string();
        let field = match e.span() {
            Some(span) => {
                let line = text[..span.start].matches('\n').count() + 1;
                format!("line {line}")
            }
            None => "document".into(),
        };
        Error::parse(field, message)
    })?;

    let settings = settings(raw.settings.unwrap_or_default())?;
    let algebra = match raw.algebra {
        Some(a) => algebra(a)?,
        None => LieSuperalgebra::new(Vec::new())?,
    };
    let r_matrix = raw.r_matrix.map(|r| r_matrix(&algebra, r)).transpose()?;
    let twist = raw.twist.map(|t| twist_terms(&algebra, t)).transpose()?;
    let gauge = raw.gauge.map(|g| gauge_terms(&algebra, g)).transpose()?;
    let representation = raw.representation.map(|r| representation(&algebra, r)).transpose()?;
    let rmatrix_direct = raw.rmatrix_direct.map(direct).transpose()?;

    if gauge.is_some() && twist.is_none() {
        return Err(Error::Schema("[gauge] needs a [twist] to act on".into()));
    }
    let has_payload = algebra.dim() > 0
        || r_matrix.is_some()
        || twist.is_some()
        || representation.is_some()
        || rmatrix_direct.is_some();
    if !has_payload {
        return Err(Error::Schema(
            "nothing to check: give an algebra basis, r_matrix, twist, representation or rmatrix_direct".into(),
        ));
    }
    Ok(SpecFile {
        settings,
        algebra,
        r_matrix,
        twist,
        gauge,
        representation,
        rmatrix_direct,
        digest,
    })
}

fn settings(raw: RawSettings) -> Result<Settings> {
    let checks = match raw.checks {
        Some(list) => CheckGroup::parse_list(&list)?,
        None => CheckGroup::ALL.to_vec(),
    };
    Ok(Settings {
        truncation_order: raw.truncation_order.unwrap_or(DEFAULT_TRUNCATION_ORDER),
        checks,
        allow_invalid_twist: raw.allow_invalid_twist.unwrap_or(false),
    })
}

fn index(alg: &LieSuperalgebra, field: &str, name: &str) -> Result<usize> {
    alg.index_of(name)
        .map_err(|_| Error::UnknownGenerator(format!("{name}` in `{field}")))
}

fn rational(field: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(field, format!("`{text}`: {message}")),
        other => other,
    })
}

fn word_parity(alg: &LieSuperalgebra, field: &str, word: &str) -> Result<Parity> {
    let letters = parse_word(alg, word).map_err(|e| match e {
        Error::UnknownGenerator(name) => Error::UnknownGenerator(format!("{name}` in `{field}")),
        other => Error::parse(field, other.to_string()),
    })?;
    Ok(letters.iter().map(|&i| alg.parity(i)).sum())
}

fn algebra(raw: RawAlgebra) -> Result<LieSuperalgebra> {
    let basis = raw
        .basis
        .into_iter()
        .enumerate()
        .map(|(k, g)| {
            let parity = Parity::from_bit(g.parity)
                .map_err(|_| Error::parse(format!("algebra.basis[{k}].parity"), "must be 0 or 1"))?;
            Ok((g.name, parity))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut alg = LieSuperalgebra::new(basis)?;
    let mut given: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (k, b) in raw.brackets.iter().enumerate() {
        let field = format!("algebra.brackets[{k}]");
        let x = index(&alg, &field, &b.x)?;
        let y = index(&alg, &field, &b.y)?;
        let mut terms = Vec::new();
        for (name, value) in &b.result {
            terms.push((index(&alg, &field, name)?, rational(&format!("{field}.result.{name}"), value)?));
        }
        if given.insert((x, y), terms).is_some() {
            return Err(Error::Schema(format!("{field}: bracket [{}, {}] given twice", b.x, b.y)));
        }
    }
    for (&(x, y), terms) in &given {
        if given.contains_key(&(y, x)) {
            alg.set_bracket(x, y, terms.clone())?;
        } else {
            alg.set_bracket_antisymmetric(x, y, terms.clone())?;
        }
    }
    Ok(alg)
}

fn r_matrix(alg: &LieSuperalgebra, raw: RawRMatrix) -> Result<RMatrix> {
    let mut terms = Vec::new();
    for (k, (a, b, c)) in raw.terms.iter().enumerate() {
        let field = format!("r_matrix.terms[{k}]");
        let (i, j) = (index(alg, &field, a)?, index(alg, &field, b)?);
        if alg.parity(i) != alg.parity(j) {
            return Err(Error::ParityMismatch(format!("{field}: {a}⊗{b} is odd")));
        }
        terms.push(((i, j), rational(&field, c)?));
    }
    Ok(RMatrix::new(terms))
}

fn twist_terms(alg: &LieSuperalgebra, raw: RawTwist) -> Result<Vec<TwistTerm>> {
    raw.terms
        .into_iter()
        .enumerate()
        .map(|(k, (order, left, right, coeff))| {
            let field = format!("twist.terms[{k}]");
            if order == 0 {
                return Err(Error::parse(field, "order must be >= 1; the 1⊗1 term is implicit"));
            }
            let parity = word_parity(alg, &field, &left)? + word_parity(alg, &field, &right)?;
            if parity.is_odd() {
                return Err(Error::ParityMismatch(format!("{field}: {left}⊗{right} is odd")));
            }
            Ok(TwistTerm { order, left, right, coeff: rational(&field, &coeff)? })
        })
        .collect()
}

fn gauge_terms(alg: &LieSuperalgebra, raw: RawGauge) -> Result<Vec<GaugeTerm>> {
    raw.element
        .into_iter()
        .enumerate()
        .map(|(k, (order, word, coeff))| {
            let field = format!("gauge.element[{k}]");
            if order == 0 {
                return Err(Error::parse(field, "order must be >= 1; the unit term is implicit"));
            }
            if word_parity(alg, &field, &word)?.is_odd() {
                return Err(Error::ParityMismatch(format!("{field}: {word} is odd")));
            }
            Ok(GaugeTerm { order, word, coeff: rational(&field, &coeff)? })
        })
        .collect()
}

fn square(field: &str, rows: &[Vec<String>], n: usize) -> Result<Vec<Vec<Rational>>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!("{field}: expected a {n}x{n} matrix")));
    }
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, v)| rational(&format!("{field}[{r}][{c}]"), v))
                .collect()
        })
        .collect()
}

fn representation(alg: &LieSuperalgebra, raw: RawRepresentation) -> Result<RepresentationSpec> {
    let space = GradedSpace::new(raw.even, raw.odd)?;
    for name in raw.images.keys() {
        index(alg, "representation.images", name)?;
    }
    let images = alg
        .names()
        .iter()
        .map(|name| {
            let field = format!("representation.images.{name}");
            let rows = raw
                .images
                .get(name)
                .ok_or_else(|| Error::Schema(format!("{field} is missing")))?;
            square(&field, rows, space.dim())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepresentationSpec { space, images })
}

fn direct(raw: RawDirect) -> Result<DirectRMatrix> {
    let space = GradedSpace::new(raw.even, raw.odd)?;
    let n = space.dim() * space.dim();
    if raw.entries.len() != n || raw.entries.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!("rmatrix_direct.entries: expected a {n}x{n} matrix")));
    }
    let entries = raw
        .entries
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, e)| {
                    let field = format!("rmatrix_direct.entries[{r}][{c}]");
                    match e {
                        RawEntry::Constant(v) => Ok(vec![rational(&field, v)?]),
                        RawEntry::Series(vs) => vs.iter().map(|v| rational(&field, v)).collect(),
                    }
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DirectRMatrix { space, entries })
}
