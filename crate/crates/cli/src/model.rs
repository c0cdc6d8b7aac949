//! JSON model documents: parsing with exact numbers, canonical emission.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use credal_core::rational::{parse_rat, Rat};
use credal_core::{
    Cloud, ContinuousCloud, GeneralizedPBox, MassFunction, OutcomeSpace, PiecewiseLinear,
    PossibilityDistribution, ProbabilityInterval,
};

/// A parsed, fully validated model file.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelDocument {
    Cloud(Cloud),
    Possibility(PossibilityDistribution),
    GenPbox(GeneralizedPBox),
    ProbIntervals(ProbabilityInterval),
    RandomSet(MassFunction),
    ContinuousCloud(ContinuousCloud),
}

impl ModelDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelDocument::Cloud(_) => "cloud",
            ModelDocument::Possibility(_) => "possibility",
            ModelDocument::GenPbox(_) => "genpbox",
            ModelDocument::ProbIntervals(_) => "probintervals",
            ModelDocument::RandomSet(_) => "randomset",
            ModelDocument::ContinuousCloud(_) => "continuous_cloud",
        }
    }

    pub fn space(&self) -> Option<&OutcomeSpace> {
        match self {
            ModelDocument::Cloud(c) => Some(c.space()),
            ModelDocument::Possibility(p) => Some(p.space()),
            ModelDocument::GenPbox(g) => Some(g.space()),
            ModelDocument::ProbIntervals(i) => Some(i.space()),
            ModelDocument::RandomSet(m) => Some(m.space()),
            ModelDocument::ContinuousCloud(_) => None,
        }
    }
}

fn number(value: &Value, what: &str) -> Result<Rat> {
    match value {
        Value::String(s) => parse_rat(s).with_context(|| format!("{what}: bad number {s:?}")),
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| {
                anyhow!(
                    "{what}: non-integer JSON numbers are inexact; quote the value, e.g. \"0.75\""
                )
            })?;
            Ok(credal_core::rational::rint(i))
        }
        other => bail!("{what}: expected a number string, got {other}"),
    }
}

fn object<'v>(value: &'v Value, what: &str) -> Result<&'v Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| anyhow!("{what}: expected an object"))
}

fn string_list(value: &Value, what: &str) -> Result<Vec<String>> {
    let arr = value
        .as_array()
        .ok_or_else(|| anyhow!("{what}: expected an array"))?;
    arr.iter()
        .map(|v| {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| anyhow!("{what}: expected strings"))
        })
        .collect()
}

/// Per-element values keyed by label, in the space's storage order.
fn value_map(doc: &Map<String, Value>, field: &str, space: &OutcomeSpace) -> Result<Vec<Rat>> {
    let map = object(
        doc.get(field)
            .ok_or_else(|| anyhow!("missing field {field:?}"))?,
        field,
    )?;
    for key in map.keys() {
        space
            .index_of(key)
            .with_context(|| format!("{field}: unknown element {key:?}"))?;
    }
    space
        .labels()
        .iter()
        .map(|label| {
            let v = map
                .get(label)
                .ok_or_else(|| anyhow!("{field}: missing value for element {label:?}"))?;
            number(v, &format!("{field}[{label}]"))
        })
        .collect()
}

fn space_of(doc: &Map<String, Value>) -> Result<OutcomeSpace> {
    let labels = string_list(
        doc.get("elements")
            .ok_or_else(|| anyhow!("missing field \"elements\""))?,
        "elements",
    )?;
    Ok(OutcomeSpace::new(labels)?)
}

fn piecewise(doc: &Map<String, Value>, field: &str) -> Result<PiecewiseLinear> {
    let obj = object(
        doc.get(field)
            .ok_or_else(|| anyhow!("missing field {field:?}"))?,
        field,
    )?;
    let pts = obj
        .get("breakpoints")
        .ok_or_else(|| anyhow!("{field}: missing \"breakpoints\""))?
        .as_array()
        .ok_or_else(|| anyhow!("{field}: breakpoints must be an array"))?;
    let mut points = Vec::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        let pair = p
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| anyhow!("{field}: breakpoint {i} must be a [x, value] pair"))?;
        points.push((
            number(&pair[0], &format!("{field} breakpoint {i} x"))?,
            number(&pair[1], &format!("{field} breakpoint {i} value"))?,
        ));
    }
    Ok(PiecewiseLinear::new(points)?)
}

pub fn parse_model(text: &str) -> Result<ModelDocument> {
    let value: Value = serde_json::from_str(text).context("model is not valid JSON")?;
    let doc = object(&value, "model")?;
    let kind = doc
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("missing field \"kind\""))?;
    match kind {
        "cloud" => {
            let space = space_of(doc)?;
            let delta = value_map(doc, "delta", &space)?;
            let pi = value_map(doc, "pi", &space)?;
            Ok(ModelDocument::Cloud(Cloud::new(space, delta, pi)?))
        }
        "possibility" => {
            let space = space_of(doc)?;
            let pi = value_map(doc, "pi", &space)?;
            Ok(ModelDocument::Possibility(PossibilityDistribution::new(
                space, pi,
            )?))
        }
        "genpbox" => {
            let space = space_of(doc)?;
            let flow = value_map(doc, "flow", &space)?;
            let fhigh = value_map(doc, "fhigh", &space)?;
            let classes_raw = doc
                .get("preorder")
                .ok_or_else(|| anyhow!("missing field \"preorder\""))?
                .as_array()
                .ok_or_else(|| anyhow!("preorder: expected an array of rank classes"))?;
            let mut preorder = Vec::with_capacity(classes_raw.len());
            for class in classes_raw {
                let labels = string_list(class, "preorder class")?;
                let indices = labels
                    .iter()
                    .map(|l| Ok(space.index_of(l)?))
                    .collect::<Result<Vec<usize>>>()?;
                preorder.push(indices);
            }
            Ok(ModelDocument::GenPbox(GeneralizedPBox::new(
                space, flow, fhigh, preorder,
            )?))
        }
        "probintervals" => {
            let space = space_of(doc)?;
            let l = value_map(doc, "l", &space)?;
            let u = value_map(doc, "u", &space)?;
            Ok(ModelDocument::ProbIntervals(ProbabilityInterval::new(
                space, l, u,
            )?))
        }
        "randomset" => {
            let space = space_of(doc)?;
            let focal_raw = doc
                .get("focal")
                .ok_or_else(|| anyhow!("missing field \"focal\""))?
                .as_array()
                .ok_or_else(|| anyhow!("focal: expected an array"))?;
            let mut focal = Vec::with_capacity(focal_raw.len());
            for (i, entry) in focal_raw.iter().enumerate() {
                let entry = object(entry, &format!("focal[{i}]"))?;
                let labels = string_list(
                    entry
                        .get("set")
                        .ok_or_else(|| anyhow!("focal[{i}]: missing \"set\""))?,
                    "focal set",
                )?;
                let event = space.event(labels.iter().map(String::as_str))?;
                let mass = number(
                    entry
                        .get("mass")
                        .ok_or_else(|| anyhow!("focal[{i}]: missing \"mass\""))?,
                    &format!("focal[{i}].mass"),
                )?;
                focal.push((event, mass));
            }
            Ok(ModelDocument::RandomSet(MassFunction::new(space, focal)?))
        }
        "continuous_cloud" => {
            let delta = piecewise(doc, "delta")?;
            let pi = piecewise(doc, "pi")?;
            if let Some(support) = doc.get("support") {
                let ends = support
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| anyhow!("support must be a [lo, hi] pair"))?;
                let lo = number(&ends[0], "support lo")?;
                let hi = number(&ends[1], "support hi")?;
                for f in [&delta, &pi] {
                    let (flo, fhi) = f.support();
                    if *flo != lo || *fhi != hi {
                        bail!(
                            "declared support [{lo}, {hi}] does not match the breakpoints [{flo}, {fhi}]"
                        );
                    }
                }
            }
            Ok(ModelDocument::ContinuousCloud(ContinuousCloud::new(
                delta, pi,
            )?))
        }
        other => bail!("unknown model kind {other:?}"),
    }
}

fn rat_value(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn labelled(space: &OutcomeSpace, values: &[Rat]) -> Value {
    let mut map = Map::new();
    for (i, v) in values.iter().enumerate() {
        map.insert(space.label(i).to_owned(), rat_value(v));
    }
    Value::Object(map)
}

fn pl_value(pl: &PiecewiseLinear) -> Value {
    let points: Vec<Value> = pl
        .breakpoints()
        .iter()
        .map(|(x, y)| json!([x.to_string(), y.to_string()]))
        .collect();
    json!({ "breakpoints": points })
}

/// Canonical JSON for a model document; parse(serialize(m)) == m.
pub fn serialize_model(model: &ModelDocument) -> String {
    let value = match model {
        ModelDocument::Cloud(c) => json!({
            "kind": "cloud",
            "elements": c.space().labels(),
            "delta": labelled(c.space(), c.delta_values()),
            "pi": labelled(c.space(), c.pi_values()),
        }),
        ModelDocument::Possibility(p) => json!({
            "kind": "possibility",
            "elements": p.space().labels(),
            "pi": labelled(p.space(), p.values()),
        }),
        ModelDocument::GenPbox(g) => {
            let preorder: Vec<Vec<&str>> = g
                .preorder()
                .iter()
                .map(|class| class.iter().map(|&i| g.space().label(i)).collect())
                .collect();
            json!({
                "kind": "genpbox",
                "elements": g.space().labels(),
                "flow": labelled(g.space(), g.flow_values()),
                "fhigh": labelled(g.space(), g.fhigh_values()),
                "preorder": preorder,
            })
        }
        ModelDocument::ProbIntervals(i) => json!({
            "kind": "probintervals",
            "elements": i.space().labels(),
            "l": labelled(i.space(), i.lower_values()),
            "u": labelled(i.space(), i.upper_values()),
        }),
        ModelDocument::RandomSet(m) => {
            let focal: Vec<Value> = m
                .focal()
                .iter()
                .map(|(event, mass)| {
                    let labels: Vec<&str> = event.iter().map(|i| m.space().label(i)).collect();
                    json!({ "set": labels, "mass": mass.to_string() })
                })
                .collect();
            json!({
                "kind": "randomset",
                "elements": m.space().labels(),
                "focal": focal,
            })
        }
        ModelDocument::ContinuousCloud(c) => {
            let (lo, hi) = c.support();
            json!({
                "kind": "continuous_cloud",
                "support": [lo.to_string(), hi.to_string()],
                "delta": pl_value(c.delta()),
                "pi": pl_value(c.pi()),
            })
        }
    };
    serde_json::to_string_pretty(&value).expect("json values serialize")
}
