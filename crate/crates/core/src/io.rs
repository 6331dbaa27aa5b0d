//! JSON forms of maps, flows, subsets, configurations and strand sets.
//! Scalars are written as exact strings (`"p/q"` or `"p"`), so reading back
//! what was written gives an identical value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pl::{Ambient, PlFlow, PlHomeo};
use crate::scalar::Scalar;
use crate::strands::{Point, PointConfig, Strand, StrandSet};
use crate::subset::{CompactSubset, Component};

type Pair = [String; 2];

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomeoJson {
    ambient: String,
    points: Vec<Pair>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlowJson {
    ambient: String,
    key_times: Vec<String>,
    frames: Vec<Vec<Pair>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
enum ComponentJson {
    #[serde(rename = "pt")]
    Point(String),
    #[serde(rename = "iv")]
    Interval(Pair),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubsetJson {
    components: Vec<ComponentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    contains0: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    contains1: Option<bool>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigJson {
    points: Vec<Pair>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StrandJson {
    times: Vec<String>,
    verts: Vec<Pair>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StrandsJson {
    strands: Vec<StrandJson>,
}

fn decode<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn encode<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn scalar<S: Scalar>(text: &str) -> Result<S> {
    S::parse_exact(text)
}

fn scalars<S: Scalar>(texts: &[String]) -> Result<Vec<S>> {
    texts.iter().map(|t| scalar(t)).collect()
}

fn pair<S: Scalar>(p: &Pair) -> Result<Point<S>> {
    Ok((scalar(&p[0])?, scalar(&p[1])?))
}

fn pairs<S: Scalar>(ps: &[Pair]) -> Result<Vec<Point<S>>> {
    ps.iter().map(pair).collect()
}

fn out_pair<S: Scalar>(p: &Point<S>) -> Pair {
    [p.0.to_exact_string(), p.1.to_exact_string()]
}

fn out_pairs<S: Scalar>(ps: &[Point<S>]) -> Vec<Pair> {
    ps.iter().map(out_pair).collect()
}

pub fn homeo_from_json<S: Scalar>(text: &str) -> Result<PlHomeo<S>> {
    let j: HomeoJson = decode(text, "homeomorphism")?;
    PlHomeo::new(Ambient::parse(&j.ambient)?, pairs(&j.points)?)
}

pub fn homeo_to_json<S: Scalar>(h: &PlHomeo<S>) -> String {
    encode(&HomeoJson { ambient: h.ambient().to_string(), points: out_pairs(h.points()) })
}

pub fn flow_from_json<S: Scalar>(text: &str) -> Result<PlFlow<S>> {
    let j: FlowJson = decode(text, "flow")?;
    let ambient = Ambient::parse(&j.ambient)?;
    let frames = j
        .frames
        .iter()
        .map(|f| PlHomeo::new(ambient, pairs(f)?))
        .collect::<Result<Vec<_>>>()?;
    PlFlow::new(ambient, scalars(&j.key_times)?, frames)
}

pub fn flow_to_json<S: Scalar>(f: &PlFlow<S>) -> String {
    encode(&FlowJson {
        ambient: f.ambient().to_string(),
        key_times: f.key_times().iter().map(Scalar::to_exact_string).collect(),
        frames: f.frames().iter().map(|h| out_pairs(h.points())).collect(),
    })
}

/// Reads a subset of `[0, 1]`. The optional `contains0` / `contains1` flags
/// must agree with the components when present.
pub fn subset_from_json<S: Scalar>(text: &str) -> Result<CompactSubset<S>> {
    let j: SubsetJson = decode(text, "subset")?;
    let comps = j
        .components
        .iter()
        .map(|c| match c {
            ComponentJson::Point(x) => Ok(Component::Point(scalar(x)?)),
            ComponentJson::Interval(iv) => Ok(Component::Interval(scalar(&iv[0])?, scalar(&iv[1])?)),
        })
        .collect::<Result<Vec<_>>>()?;
    let n = CompactSubset::new(comps)?;
    if j.contains0.is_some_and(|c| c != n.contains_zero()) || j.contains1.is_some_and(|c| c != n.contains_one()) {
        return Err(Error::InvalidSubset("contains0/contains1 disagree with the components".into()));
    }
    Ok(n)
}

pub fn subset_to_json<S: Scalar>(n: &CompactSubset<S>) -> String {
    let components = n
        .components()
        .iter()
        .map(|c| match c {
            Component::Point(x) => ComponentJson::Point(x.to_exact_string()),
            Component::Interval(a, b) => ComponentJson::Interval([a.to_exact_string(), b.to_exact_string()]),
        })
        .collect();
    encode(&SubsetJson { components, contains0: Some(n.contains_zero()), contains1: Some(n.contains_one()) })
}

pub fn config_from_json<S: Scalar>(text: &str) -> Result<PointConfig<S>> {
    let j: ConfigJson = decode(text, "configuration")?;
    PointConfig::new(pairs(&j.points)?)
}

pub fn config_to_json<S: Scalar>(k: &PointConfig<S>) -> String {
    encode(&ConfigJson { points: out_pairs(k.points()) })
}

pub fn strands_from_json<S: Scalar>(text: &str) -> Result<StrandSet<S>> {
    let j: StrandsJson = decode(text, "strand set")?;
    let strands = j
        .strands
        .iter()
        .map(|s| Strand::new(scalars(&s.times)?, pairs(&s.verts)?))
        .collect::<Result<Vec<_>>>()?;
    StrandSet::new(strands)
}

pub fn strands_to_json<S: Scalar>(f: &StrandSet<S>) -> String {
    encode(&StrandsJson {
        strands: f
            .strands()
            .iter()
            .map(|s| StrandJson {
                times: s.times().iter().map(Scalar::to_exact_string).collect(),
                verts: out_pairs(s.verts()),
            })
            .collect(),
    })
}

/// Any of the JSON documents above, told apart by their keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document<S> {
    Homeo(PlHomeo<S>),
    Flow(PlFlow<S>),
    Subset(CompactSubset<S>),
    Config(PointConfig<S>),
    Strands(StrandSet<S>),
}

impl<S> Document<S> {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Homeo(_) => "homeomorphism",
            Document::Flow(_) => "flow",
            Document::Subset(_) => "subset",
            Document::Config(_) => "configuration",
            Document::Strands(_) => "strand set",
        }
    }
}

pub fn read_document<S: Scalar>(text: &str) -> Result<Document<S>> {
    let value: serde_json::Value = decode(text, "document")?;
    let has = |key: &str| value.get(key).is_some();
    if has("strands") {
        strands_from_json(text).map(Document::Strands)
    } else if has("key_times") {
        flow_from_json(text).map(Document::Flow)
    } else if has("components") {
        subset_from_json(text).map(Document::Subset)
    } else if has("ambient") {
        homeo_from_json(text).map(Document::Homeo)
    } else if has("points") {
        config_from_json(text).map(Document::Config)
    } else {
        Err(Error::Parse("unrecognised document: expected a flow, map, subset, configuration or strand set".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trips_are_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ambient in [Ambient::Interval, Ambient::Line, Ambient::Circle] {
            for _ in 0..20 {
                let f: PlFlow<Rational> = sample::flow(&mut rng, ambient, 3, 3);
                let text = flow_to_json(&f);
                assert_eq!(flow_from_json::<Rational>(&text).unwrap(), f);
                assert_eq!(flow_to_json(&flow_from_json::<Rational>(&text).unwrap()), text);
                let h = f.endpoint();
                assert_eq!(homeo_from_json::<Rational>(&homeo_to_json(h)).unwrap(), *h);
            }
        }
        for _ in 0..20 {
            let n: CompactSubset<Rational> = sample::compact_subset(&mut rng, 4);
            assert_eq!(subset_from_json::<Rational>(&subset_to_json(&n)).unwrap(), n);
            let s: StrandSet<Rational> = sample::strand_set(&mut rng, 3, 2);
            assert_eq!(strands_from_json::<Rational>(&strands_to_json(&s)).unwrap(), s);
            let k = s.start();
            assert_eq!(config_from_json::<Rational>(&config_to_json(&k)).unwrap(), k);
        }
    }

    #[test]
    fn subset_format() {
        let text = r#"{"components": [{"pt": "0"}, {"iv": ["1/2", "3/4"]}], "contains0": true}"#;
        let n: CompactSubset<Rational> = subset_from_json(text).unwrap();
        assert_eq!(n.word(), "ab");
        let wrong = r#"{"components": [{"pt": "1/3"}], "contains0": true}"#;
        assert!(matches!(subset_from_json::<Rational>(wrong), Err(Error::InvalidSubset(_))));
        assert!(matches!(subset_from_json::<Rational>("{"), Err(Error::Parse(_))));
        assert!(matches!(subset_from_json::<Rational>(r#"{"components": [{"pt": "x"}]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn documents_are_recognised() {
        let f = PlFlow::<Rational>::identity(Ambient::Circle);
        assert_eq!(read_document::<Rational>(&flow_to_json(&f)).unwrap(), Document::Flow(f.clone()));
        let h = f.endpoint().clone();
        assert_eq!(read_document::<Rational>(&homeo_to_json(&h)).unwrap().kind(), "homeomorphism");
        let k = PointConfig::new(vec![(Rational::from_ratio(1, 2), Rational::from_ratio(1, 3))]).unwrap();
        assert_eq!(read_document::<Rational>(&config_to_json(&k)).unwrap(), Document::Config(k));
        assert!(read_document::<Rational>("{}").is_err());
    }
}
