//! Problem instance descriptions.
//!
//! A [`SpecDraft`] holds raw, user-supplied generator parameters. Calling
//! [`SpecDraft::validate`] checks every invariant at once and produces an
//! immutable [`ProblemSpec`], the only form the evaluator accepts.
//!
//! The text format is line oriented:
//!
//! ```text
//! # three objectives, overlapping meta-variables
//! objectives = 3
//! meta_q = 10
//! meta_t = 4
//! distance_vars = 10
//! norm_p = auto
//! composition = multiplicative
//! distance = deceptive
//!
//! [constraint]
//! type = band
//! reference = diagonal
//! threshold_a = 0.3
//! threshold_b = 0.7
//! ```

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::format_real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Composition {
    Additive,
    Multiplicative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceKind {
    Deceptive,
    Robust,
    ConvexConcave,
    Disconnected,
}

/// Landscape summed into the radial profile of the shaped-front kinds
/// (`convex_concave` and `disconnected`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseDistance {
    Deceptive,
    Robust,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormChoice {
    Auto,
    Value(f64),
}

/// Reference direction as written by the user, before resolution.
#[derive(Debug, Clone, PartialEq)]
pub enum Reference {
    Diagonal,
    /// 1-based canonical axis `e_i`.
    Axis(usize),
    Vector(Vec<f64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintType {
    MinAngle,
    MaxAngle,
    Band,
    NearestAxis,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintDraft {
    pub kind: ConstraintType,
    pub reference: Option<Reference>,
    pub threshold_a: Option<f64>,
    pub threshold_b: Option<f64>,
    pub axis_j: Option<usize>,
}

impl ConstraintDraft {
    pub fn new(kind: ConstraintType) -> Self {
        Self {
            kind,
            reference: None,
            threshold_a: None,
            threshold_b: None,
            axis_j: None,
        }
    }

    pub fn min_angle(reference: Reference, a: f64) -> Self {
        Self {
            reference: Some(reference),
            threshold_a: Some(a),
            ..Self::new(ConstraintType::MinAngle)
        }
    }

    pub fn max_angle(reference: Reference, a: f64) -> Self {
        Self {
            reference: Some(reference),
            threshold_a: Some(a),
            ..Self::new(ConstraintType::MaxAngle)
        }
    }

    pub fn band(reference: Reference, a: f64, b: f64) -> Self {
        Self {
            reference: Some(reference),
            threshold_a: Some(a),
            threshold_b: Some(b),
            ..Self::new(ConstraintType::Band)
        }
    }

    pub fn nearest_axis(j: usize) -> Self {
        Self {
            axis_j: Some(j),
            ..Self::new(ConstraintType::NearestAxis)
        }
    }
}

/// Validated constraint thresholds. Axis indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConstraintKind {
    MinAngle { a: f64 },
    MaxAngle { a: f64 },
    Band { a: f64, b: f64 },
    NearestAxis { j: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    kind: ConstraintKind,
    reference: Vec<f64>,
}

impl Constraint {
    pub fn kind(&self) -> ConstraintKind {
        self.kind
    }

    /// Explicit reference vector; for nearest-axis constraints this is `e_j`.
    pub fn reference(&self) -> &[f64] {
        &self.reference
    }
}

/// Unvalidated generator parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecDraft {
    pub objectives: usize,
    pub meta_q: usize,
    pub meta_t: usize,
    pub use_meta: bool,
    pub distance_vars: usize,
    pub norm_p: NormChoice,
    pub composition: Composition,
    pub distance: DistanceKind,
    pub base_distance: BaseDistance,
    pub valleys_k: u32,
    pub dissimilar: bool,
    pub distance_reference: Reference,
    pub constraints: Vec<ConstraintDraft>,
}

impl SpecDraft {
    pub fn new(objectives: usize, distance_vars: usize, distance: DistanceKind) -> Self {
        Self {
            objectives,
            meta_q: 1,
            meta_t: 0,
            use_meta: true,
            distance_vars,
            norm_p: NormChoice::Auto,
            composition: Composition::Multiplicative,
            distance,
            base_distance: BaseDistance::Robust,
            valleys_k: 1,
            dissimilar: false,
            distance_reference: Reference::Diagonal,
            constraints: Vec::new(),
        }
    }

    /// Checks every invariant, collecting all diagnostics instead of stopping
    /// at the first.
    pub fn validate(&self) -> Result<ProblemSpec> {
        let mut errors = Vec::new();
        let m = self.objectives;

        if m < 2 {
            errors.push(format!("objectives ≥ 2 required (got {m})"));
        }
        if self.distance_vars < 1 {
            errors.push("distance_vars ≥ 1 required (got 0)".to_string());
        }
        if self.valleys_k < 1 {
            errors.push("valleys_k ≥ 1 required (got 0)".to_string());
        }

        let (q, t) = if self.use_meta {
            (self.meta_q, self.meta_t)
        } else {
            (1, 0)
        };
        if q < 1 {
            errors.push("meta_q ≥ 1 required (got 0)".to_string());
        }
        if t > 0 && 2 * t + 1 >= q {
            errors.push(format!("2t+1 < q violated ({} ≥ {})", 2 * t + 1, q));
        }

        let norm_p = match self.norm_p {
            NormChoice::Auto => suggested_norm(m.max(2)),
            NormChoice::Value(p) => {
                if !(p.is_finite() && p > 0.0) {
                    errors.push(format!("norm_p > 0 required (got {p})"));
                }
                p
            }
        };

        let distance_reference = match resolve_reference(&self.distance_reference, m) {
            Ok(d) => d,
            Err(e) => {
                errors.push(format!("distance_reference: {e}"));
                Vec::new()
            }
        };

        let mut constraints = Vec::with_capacity(self.constraints.len());
        for (n, draft) in self.constraints.iter().enumerate() {
            match validate_constraint(draft, m) {
                Ok(c) => constraints.push(c),
                Err(list) => {
                    errors.extend(list.into_iter().map(|e| format!("constraint {}: {e}", n + 1)))
                }
            }
        }

        if !errors.is_empty() {
            return Err(Error::InvalidSpec(errors));
        }

        Ok(ProblemSpec {
            objectives: m,
            meta_q: q,
            meta_t: t,
            use_meta: self.use_meta,
            distance_vars: self.distance_vars,
            norm_p,
            composition: self.composition,
            distance: self.distance,
            base_distance: self.base_distance,
            valleys_k: self.valleys_k,
            dissimilar: self.dissimilar,
            distance_reference,
            constraints,
        })
    }
}

fn validate_constraint(draft: &ConstraintDraft, m: usize) -> std::result::Result<Constraint, Vec<String>> {
    let mut errors = Vec::new();
    let unit_a = |a: Option<f64>, name: &str, errors: &mut Vec<String>| match a {
        None => {
            errors.push(format!("missing {name}"));
            f64::NAN
        }
        Some(a) if !(a > 0.0 && a < 1.0) => {
            errors.push(format!("{name} must lie in (0, 1) (got {a})"));
            a
        }
        Some(a) => a,
    };

    let kind = match draft.kind {
        ConstraintType::MinAngle => ConstraintKind::MinAngle {
            a: unit_a(draft.threshold_a, "threshold_a", &mut errors),
        },
        ConstraintType::MaxAngle => ConstraintKind::MaxAngle {
            a: unit_a(draft.threshold_a, "threshold_a", &mut errors),
        },
        ConstraintType::Band => {
            let a = unit_a(draft.threshold_a, "threshold_a", &mut errors);
            let b = unit_a(draft.threshold_b, "threshold_b", &mut errors);
            if a >= b {
                errors.push(format!("A < B required (A = {a}, B = {b})"));
            }
            ConstraintKind::Band { a, b }
        }
        ConstraintType::NearestAxis => {
            let j = match draft.axis_j {
                None => {
                    errors.push("missing axis_j".to_string());
                    0
                }
                Some(j) if j < 1 || j > m => {
                    errors.push(format!("axis_j must lie in [1, {m}] (got {j})"));
                    j
                }
                Some(j) => j,
            };
            ConstraintKind::NearestAxis { j }
        }
    };

    let reference = match (draft.kind, &draft.reference) {
        (ConstraintType::NearestAxis, _) => {
            let mut e = vec![0.0; m];
            if let ConstraintKind::NearestAxis { j } = kind {
                if (1..=m).contains(&j) {
                    e[j - 1] = 1.0;
                }
            }
            e
        }
        (_, None) => {
            errors.push("missing reference".to_string());
            Vec::new()
        }
        (_, Some(r)) => match resolve_reference(r, m) {
            Ok(d) => d,
            Err(e) => {
                errors.push(format!("reference: {e}"));
                Vec::new()
            }
        },
    };

    if errors.is_empty() {
        Ok(Constraint { kind, reference })
    } else {
        Err(errors)
    }
}

fn resolve_reference(reference: &Reference, m: usize) -> std::result::Result<Vec<f64>, String> {
    match reference {
        Reference::Diagonal => Ok(vec![1.0; m]),
        Reference::Axis(i) => {
            if *i < 1 || *i > m {
                return Err(format!("axis e{i} outside e1..e{m}"));
            }
            let mut e = vec![0.0; m];
            e[i - 1] = 1.0;
            Ok(e)
        }
        Reference::Vector(v) => {
            if v.len() != m {
                return Err(format!("expected {m} components, got {}", v.len()));
            }
            if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err("components must be finite and nonnegative".to_string());
            }
            if !v.iter().any(|x| *x > 0.0) {
                return Err("vector must have a positive component".to_string());
            }
            Ok(v.clone())
        }
    }
}

/// `⌈log2 M⌉`: the smallest p for which the diagonal point of the unit
/// p-norm surface has all coordinates at least 1/2.
pub fn suggested_norm(objectives: usize) -> f64 {
    assert!(objectives >= 2, "suggested_norm needs at least two objectives");
    (usize::BITS - (objectives - 1).leading_zeros()) as f64
}

/// A validated, immutable problem instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    objectives: usize,
    meta_q: usize,
    meta_t: usize,
    use_meta: bool,
    distance_vars: usize,
    norm_p: f64,
    composition: Composition,
    distance: DistanceKind,
    base_distance: BaseDistance,
    valleys_k: u32,
    dissimilar: bool,
    distance_reference: Vec<f64>,
    constraints: Vec<Constraint>,
}

impl ProblemSpec {
    pub fn objectives(&self) -> usize {
        self.objectives
    }
    pub fn meta_q(&self) -> usize {
        self.meta_q
    }
    pub fn meta_t(&self) -> usize {
        self.meta_t
    }
    pub fn uses_meta(&self) -> bool {
        self.use_meta
    }
    pub fn distance_vars(&self) -> usize {
        self.distance_vars
    }
    pub fn norm_p(&self) -> f64 {
        self.norm_p
    }
    /// `p < 1` gives a quasi-norm surface (the triangle inequality fails).
    pub fn is_quasi_norm(&self) -> bool {
        self.norm_p < 1.0
    }
    pub fn composition(&self) -> Composition {
        self.composition
    }
    pub fn distance(&self) -> DistanceKind {
        self.distance
    }
    pub fn base_distance(&self) -> BaseDistance {
        self.base_distance
    }
    pub fn valleys_k(&self) -> u32 {
        self.valleys_k
    }
    pub fn dissimilar(&self) -> bool {
        self.dissimilar
    }
    /// Reference direction for the angle that drives the distance landscape.
    pub fn distance_reference(&self) -> &[f64] {
        &self.distance_reference
    }
    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// R = (M−1)q + t.
    pub fn position_dim(&self) -> usize {
        (self.objectives - 1) * self.meta_q + self.meta_t
    }

    /// N = R + S.
    pub fn dimension(&self) -> usize {
        self.position_dim() + self.distance_vars
    }

    pub fn to_draft(&self) -> SpecDraft {
        SpecDraft {
            objectives: self.objectives,
            meta_q: self.meta_q,
            meta_t: self.meta_t,
            use_meta: self.use_meta,
            distance_vars: self.distance_vars,
            norm_p: NormChoice::Value(self.norm_p),
            composition: self.composition,
            distance: self.distance,
            base_distance: self.base_distance,
            valleys_k: self.valleys_k,
            dissimilar: self.dissimilar,
            distance_reference: Reference::Vector(self.distance_reference.clone()),
            constraints: self
                .constraints
                .iter()
                .map(|c| {
                    let reference = Some(Reference::Vector(c.reference.clone()));
                    match c.kind {
                        ConstraintKind::MinAngle { a } => ConstraintDraft {
                            reference,
                            threshold_a: Some(a),
                            ..ConstraintDraft::new(ConstraintType::MinAngle)
                        },
                        ConstraintKind::MaxAngle { a } => ConstraintDraft {
                            reference,
                            threshold_a: Some(a),
                            ..ConstraintDraft::new(ConstraintType::MaxAngle)
                        },
                        ConstraintKind::Band { a, b } => ConstraintDraft {
                            reference,
                            threshold_a: Some(a),
                            threshold_b: Some(b),
                            ..ConstraintDraft::new(ConstraintType::Band)
                        },
                        ConstraintKind::NearestAxis { j } => ConstraintDraft::nearest_axis(j),
                    }
                })
                .collect(),
        }
    }

    /// Canonical text form; `parse_spec(&spec.render())` returns `spec`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "objectives = {}", self.objectives);
        let _ = writeln!(out, "use_meta = {}", self.use_meta);
        let _ = writeln!(out, "meta_q = {}", self.meta_q);
        let _ = writeln!(out, "meta_t = {}", self.meta_t);
        let _ = writeln!(out, "distance_vars = {}", self.distance_vars);
        let _ = writeln!(out, "norm_p = {}", format_real(self.norm_p));
        let _ = writeln!(out, "composition = {}", self.composition);
        let _ = writeln!(out, "distance = {}", self.distance);
        let _ = writeln!(out, "base_distance = {}", self.base_distance);
        let _ = writeln!(out, "valleys_k = {}", self.valleys_k);
        let _ = writeln!(out, "dissimilar = {}", self.dissimilar);
        let _ = writeln!(out, "distance_reference = {}", render_vector(&self.distance_reference));
        for c in &self.constraints {
            out.push_str("\n[constraint]\n");
            match c.kind {
                ConstraintKind::MinAngle { a } | ConstraintKind::MaxAngle { a } => {
                    let name = if matches!(c.kind, ConstraintKind::MinAngle { .. }) {
                        "min_angle"
                    } else {
                        "max_angle"
                    };
                    let _ = writeln!(out, "type = {name}");
                    let _ = writeln!(out, "reference = {}", render_vector(&c.reference));
                    let _ = writeln!(out, "threshold_a = {}", format_real(a));
                }
                ConstraintKind::Band { a, b } => {
                    let _ = writeln!(out, "type = band");
                    let _ = writeln!(out, "reference = {}", render_vector(&c.reference));
                    let _ = writeln!(out, "threshold_a = {}", format_real(a));
                    let _ = writeln!(out, "threshold_b = {}", format_real(b));
                }
                ConstraintKind::NearestAxis { j } => {
                    let _ = writeln!(out, "type = nearest_axis");
                    let _ = writeln!(out, "axis_j = {j}");
                }
            }
        }
        out
    }
}

fn render_vector(v: &[f64]) -> String {
    v.iter().map(|x| format_real(*x)).collect::<Vec<_>>().join(", ")
}

macro_rules! keyword_enum {
    ($ty:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($ty::$variant => $text),+ })
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($text => Ok($ty::$variant),)+
                    other => Err(format!(
                        "unknown {} `{}` (expected one of: {})",
                        stringify!($ty),
                        other,
                        [$($text),+].join(", ")
                    )),
                }
            }
        }
    };
}

keyword_enum!(Composition { Additive => "additive", Multiplicative => "multiplicative" });
keyword_enum!(DistanceKind {
    Deceptive => "deceptive",
    Robust => "robust",
    ConvexConcave => "convex_concave",
    Disconnected => "disconnected",
});
keyword_enum!(BaseDistance { Deceptive => "deceptive", Robust => "robust" });
keyword_enum!(ConstraintType {
    MinAngle => "min_angle",
    MaxAngle => "max_angle",
    Band => "band",
    NearestAxis => "nearest_axis",
});

impl FromStr for NormChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "auto" {
            return Ok(NormChoice::Auto);
        }
        s.parse::<f64>()
            .map(NormChoice::Value)
            .map_err(|_| format!("expected a positive real or `auto`, got `{s}`"))
    }
}

impl fmt::Display for NormChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormChoice::Auto => f.write_str("auto"),
            NormChoice::Value(p) => f.write_str(&format_real(*p)),
        }
    }
}

impl FromStr for Reference {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "diagonal" {
            return Ok(Reference::Diagonal);
        }
        if let Some(rest) = s.strip_prefix('e') {
            if let Ok(i) = rest.parse::<usize>() {
                return Ok(Reference::Axis(i));
            }
        }
        s.split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Reference::Vector)
            .map_err(|_| format!("expected `diagonal`, an axis label like `e2`, or a comma-separated vector, got `{s}`"))
    }
}

pub(crate) fn parse_bool(s: &str) -> std::result::Result<bool, String> {
    match s {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(format!("expected true or false, got `{other}`")),
    }
}

/// Splits one line into `(key, value)`, stripping comments. Returns `None` for
/// blank lines and `Some(Err)` for lines without `=`.
pub(crate) fn split_line(raw: &str) -> Option<std::result::Result<(&str, &str), String>> {
    let line = raw.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return None;
    }
    Some(match line.split_once('=') {
        Some((k, v)) => Ok((k.trim(), v.trim())),
        None => Err(format!("expected `key = value`, got `{line}`")),
    })
}

const TOP_KEYS: &[&str] = &[
    "objectives",
    "meta_q",
    "meta_t",
    "use_meta",
    "distance_vars",
    "norm_p",
    "composition",
    "distance",
    "base_distance",
    "valleys_k",
    "dissimilar",
    "distance_reference",
];

const CONSTRAINT_KEYS: &[&str] = &["type", "reference", "threshold_a", "threshold_b", "axis_j"];

struct PendingConstraint {
    line: usize,
    fields: Vec<(&'static str, String, usize)>,
}

/// Parses and validates a spec file.
pub fn parse_spec(text: &str) -> Result<ProblemSpec> {
    let mut top: Vec<(&'static str, String, usize)> = Vec::new();
    let mut blocks: Vec<PendingConstraint> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.split('#').next().unwrap_or("").trim();
        if trimmed.starts_with('[') {
            if trimmed == "[constraint]" {
                blocks.push(PendingConstraint {
                    line: line_no,
                    fields: Vec::new(),
                });
                continue;
            }
            return Err(syntax(line_no, format!("unknown section `{trimmed}`")));
        }
        let Some(kv) = split_line(raw) else { continue };
        let (key, value) = kv.map_err(|m| syntax(line_no, m))?;

        let (known, fields) = match blocks.last_mut() {
            Some(block) => (CONSTRAINT_KEYS, &mut block.fields),
            None => (TOP_KEYS, &mut top),
        };
        let Some(&key) = known.iter().find(|k| **k == key) else {
            return Err(syntax(line_no, format!("unknown key `{key}`")));
        };
        if fields.iter().any(|(k, _, _)| *k == key) {
            return Err(syntax(line_no, format!("duplicate key `{key}`")));
        }
        fields.push((key, value.to_string(), line_no));
    }

    let mut draft = SpecDraft::new(0, 0, DistanceKind::Deceptive);
    let mut seen_objectives = false;
    let mut seen_vars = false;
    let mut seen_distance = false;

    for (key, value, line) in &top {
        let v = value.as_str();
        let e = |m: String| syntax(*line, format!("{key}: {m}"));
        match *key {
            "objectives" => {
                draft.objectives = parse_int(v).map_err(e)?;
                seen_objectives = true;
            }
            "meta_q" => draft.meta_q = parse_int(v).map_err(e)?,
            "meta_t" => draft.meta_t = parse_int(v).map_err(e)?,
            "use_meta" => draft.use_meta = parse_bool(v).map_err(e)?,
            "distance_vars" => {
                draft.distance_vars = parse_int(v).map_err(e)?;
                seen_vars = true;
            }
            "norm_p" => draft.norm_p = v.parse().map_err(e)?,
            "composition" => draft.composition = v.parse().map_err(e)?,
            "distance" => {
                draft.distance = v.parse().map_err(e)?;
                seen_distance = true;
            }
            "base_distance" => draft.base_distance = v.parse().map_err(e)?,
            "valleys_k" => draft.valleys_k = parse_int(v).map_err(e)?,
            "dissimilar" => draft.dissimilar = parse_bool(v).map_err(e)?,
            "distance_reference" => draft.distance_reference = v.parse().map_err(e)?,
            _ => unreachable!("key list and match arms disagree"),
        }
    }

    let mut missing = Vec::new();
    if !seen_objectives {
        missing.push("objectives");
    }
    if !seen_vars {
        missing.push("distance_vars");
    }
    if !seen_distance {
        missing.push("distance");
    }
    if !missing.is_empty() {
        return Err(syntax(0, format!("missing required key(s): {}", missing.join(", "))));
    }

    for block in &blocks {
        draft.constraints.push(parse_constraint(block)?);
    }

    draft.validate()
}

fn parse_constraint(block: &PendingConstraint) -> Result<ConstraintDraft> {
    let get = |name: &str| block.fields.iter().find(|(k, _, _)| *k == name);
    let Some((_, kind, line)) = get("type") else {
        return Err(syntax(block.line, "constraint block missing required field `type`".into()));
    };
    let kind: ConstraintType = kind.parse().map_err(|m| syntax(*line, m))?;
    let mut draft = ConstraintDraft::new(kind);

    let required: &[&str] = match kind {
        ConstraintType::MinAngle | ConstraintType::MaxAngle => &["reference", "threshold_a"],
        ConstraintType::Band => &["reference", "threshold_a", "threshold_b"],
        ConstraintType::NearestAxis => &["axis_j"],
    };
    for name in required {
        if get(name).is_none() {
            return Err(syntax(
                block.line,
                format!("constraint block missing required field `{name}`"),
            ));
        }
    }

    for (key, value, line) in &block.fields {
        let e = |m: String| syntax(*line, format!("{key}: {m}"));
        match *key {
            "type" => {}
            "reference" => draft.reference = Some(value.parse().map_err(e)?),
            "threshold_a" => draft.threshold_a = Some(parse_real(value).map_err(e)?),
            "threshold_b" => draft.threshold_b = Some(parse_real(value).map_err(e)?),
            "axis_j" => draft.axis_j = Some(parse_int(value).map_err(e)?),
            _ => unreachable!("key list and match arms disagree"),
        }
    }
    Ok(draft)
}

fn syntax(line: usize, message: String) -> Error {
    Error::Syntax { line, message }
}

pub(crate) fn parse_int<T: FromStr>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|_| format!("expected a nonnegative integer, got `{s}`"))
}

fn parse_real(s: &str) -> std::result::Result<f64, String> {
    s.parse().map_err(|_| format!("expected a real number, got `{s}`"))
}
