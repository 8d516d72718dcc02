//! Seeded generation of instance families.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::spec::{
    parse_bool, parse_int, split_line, BaseDistance, Composition, DistanceKind, NormChoice, ProblemSpec,
    SpecDraft,
};

/// Draws allowed per spec before the ranges are declared unusable.
pub const MAX_REJECTIONS: usize = 10_000;

/// Choice set for every spec field. Each draw picks uniformly from each set.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteRanges {
    pub objectives: Vec<usize>,
    pub meta_q: Vec<usize>,
    pub meta_t: Vec<usize>,
    pub use_meta: Vec<bool>,
    pub distance_vars: Vec<usize>,
    pub norm_p: Vec<NormChoice>,
    pub composition: Vec<Composition>,
    pub distance: Vec<DistanceKind>,
    pub base_distance: Vec<BaseDistance>,
    pub valleys_k: Vec<u32>,
    pub dissimilar: Vec<bool>,
}

impl Default for SuiteRanges {
    fn default() -> Self {
        Self {
            objectives: (2..=10).collect(),
            meta_q: (5..=12).collect(),
            meta_t: (0..=4).collect(),
            use_meta: vec![true],
            distance_vars: (5..=20).collect(),
            norm_p: vec![NormChoice::Auto],
            composition: vec![Composition::Additive, Composition::Multiplicative],
            distance: vec![
                DistanceKind::Deceptive,
                DistanceKind::Robust,
                DistanceKind::ConvexConcave,
                DistanceKind::Disconnected,
            ],
            base_distance: vec![BaseDistance::Robust],
            valleys_k: (1..=5).collect(),
            dissimilar: vec![false, true],
        }
    }
}

impl SuiteRanges {
    /// Parses `key = value` lines on top of the defaults. Integer fields take
    /// an inclusive range `a..b` or a comma list; the rest take comma lists.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ranges = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let (key, value) = match split_line(raw) {
                None => continue,
                Some(Ok(kv)) => kv,
                Some(Err(message)) => return Err(Error::Syntax { line, message }),
            };
            let syntax = |message: String| Error::Syntax { line, message };
            match key {
                "objectives" => ranges.objectives = int_set(value).map_err(syntax)?,
                "meta_q" => ranges.meta_q = int_set(value).map_err(syntax)?,
                "meta_t" => ranges.meta_t = int_set(value).map_err(syntax)?,
                "distance_vars" => ranges.distance_vars = int_set(value).map_err(syntax)?,
                "valleys_k" => ranges.valleys_k = int_set(value).map_err(syntax)?,
                "use_meta" => ranges.use_meta = list(value, parse_bool).map_err(syntax)?,
                "dissimilar" => ranges.dissimilar = list(value, parse_bool).map_err(syntax)?,
                "norm_p" => ranges.norm_p = list(value, str::parse).map_err(syntax)?,
                "composition" => ranges.composition = list(value, str::parse).map_err(syntax)?,
                "distance" => ranges.distance = list(value, str::parse).map_err(syntax)?,
                "base_distance" => ranges.base_distance = list(value, str::parse).map_err(syntax)?,
                other => return Err(syntax(format!("unknown key `{other}`"))),
            }
        }
        Ok(ranges)
    }

    fn check_nonempty(&self) -> Result<()> {
        let sizes = [
            ("objectives", self.objectives.len()),
            ("meta_q", self.meta_q.len()),
            ("meta_t", self.meta_t.len()),
            ("use_meta", self.use_meta.len()),
            ("distance_vars", self.distance_vars.len()),
            ("norm_p", self.norm_p.len()),
            ("composition", self.composition.len()),
            ("distance", self.distance.len()),
            ("base_distance", self.base_distance.len()),
            ("valleys_k", self.valleys_k.len()),
            ("dissimilar", self.dissimilar.len()),
        ];
        match sizes.iter().find(|(_, n)| *n == 0) {
            Some((name, _)) => Err(Error::Suite(format!("empty choice set for `{name}`"))),
            None => Ok(()),
        }
    }
}

fn list<T>(value: &str, parse: impl Fn(&str) -> std::result::Result<T, String>) -> std::result::Result<Vec<T>, String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse)
        .collect()
}

fn int_set<T: FromStr + TryFrom<u64>>(value: &str) -> std::result::Result<Vec<T>, String> {
    if let Some((a, b)) = value.split_once("..") {
        let lo: u64 = parse_int(a.trim())?;
        let hi: u64 = parse_int(b.trim())?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        return (lo..=hi)
            .map(|v| T::try_from(v).map_err(|_| format!("{v} out of range")))
            .collect();
    }
    list(value, parse_int)
}

fn pick<T: Clone>(rng: &mut ChaCha8Rng, set: &[T]) -> T {
    set.choose(rng).expect("choice sets checked nonempty").clone()
}

/// `count` valid specs drawn from `ranges`; a pure function of its inputs.
/// Draws that fail validation (such as `2t+1 ≥ q`) are rejected and redrawn.
pub fn generate_suite(seed: u64, count: usize, ranges: &SuiteRanges) -> Result<Vec<ProblemSpec>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    ranges.check_nonempty()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let mut accepted = None;
        for _ in 0..MAX_REJECTIONS {
            let draft = SpecDraft {
                objectives: pick(&mut rng, &ranges.objectives),
                meta_q: pick(&mut rng, &ranges.meta_q),
                meta_t: pick(&mut rng, &ranges.meta_t),
                use_meta: pick(&mut rng, &ranges.use_meta),
                distance_vars: pick(&mut rng, &ranges.distance_vars),
                norm_p: pick(&mut rng, &ranges.norm_p),
                composition: pick(&mut rng, &ranges.composition),
                distance: pick(&mut rng, &ranges.distance),
                base_distance: pick(&mut rng, &ranges.base_distance),
                valleys_k: pick(&mut rng, &ranges.valleys_k),
                dissimilar: pick(&mut rng, &ranges.dissimilar),
                ..SpecDraft::new(2, 1, DistanceKind::Robust)
            };
            if let Ok(spec) = draft.validate() {
                accepted = Some(spec);
                break;
            }
        }
        match accepted {
            Some(spec) => out.push(spec),
            None => {
                return Err(Error::Suite(format!(
                    "no valid spec for instance {} after {MAX_REJECTIONS} draws",
                    n + 1
                )))
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse_spec;

    #[test]
    fn same_seed_same_suite() {
        let r = SuiteRanges::default();
        let a = generate_suite(42, 5, &r).unwrap();
        let b = generate_suite(42, 5, &r).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, generate_suite(43, 5, &r).unwrap());
    }

    #[test]
    fn emitted_specs_satisfy_layout_rule() {
        for spec in generate_suite(7, 200, &SuiteRanges::default()).unwrap() {
            let (q, t) = (spec.meta_q(), spec.meta_t());
            assert!(t == 0 || 2 * t + 1 < q);
            assert_eq!(spec.position_dim(), (spec.objectives() - 1) * q + t);
            assert!((2..=10).contains(&spec.objectives()));
            assert_eq!(parse_spec(&spec.render()).unwrap(), spec);
        }
    }

    #[test]
    fn impossible_layout_reported() {
        let r = SuiteRanges::parse("meta_q = 5\nmeta_t = 2").unwrap();
        assert!(matches!(generate_suite(1, 1, &r), Err(Error::Suite(_))));
    }

    #[test]
    fn empty_choice_set_reported() {
        let r = SuiteRanges::parse("distance = ").unwrap();
        match generate_suite(1, 1, &r) {
            Err(Error::Suite(m)) => assert!(m.contains("distance")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ranges_file_syntax() {
        let r = SuiteRanges::parse("# small\nobjectives = 3..4\nvalleys_k = 1, 3\ndistance = robust, disconnected\nnorm_p = auto, 0.5").unwrap();
        assert_eq!(r.objectives, vec![3, 4]);
        assert_eq!(r.valleys_k, vec![1, 3]);
        assert_eq!(r.distance, vec![DistanceKind::Robust, DistanceKind::Disconnected]);
        assert_eq!(r.norm_p, vec![NormChoice::Auto, NormChoice::Value(0.5)]);
        assert!(matches!(SuiteRanges::parse("colour = red"), Err(Error::Syntax { line: 1, .. })));
        assert!(SuiteRanges::parse("objectives = 5..2").is_err());
        assert!(generate_suite(1, 0, &r).is_err());
    }

    #[test]
    fn count_and_membership() {
        let s = generate_suite(3, 3, &SuiteRanges::default()).unwrap();
        assert_eq!(s.len(), 3);
    }
}
