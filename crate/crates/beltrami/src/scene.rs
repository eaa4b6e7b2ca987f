//! Figure descriptions: a JSON scene format listing model parameters and
//! drawable objects.
//!
//! ```json
//! {
//!   "a": 1.0,
//!   "R": 1.0,
//!   "objects": [
//!     { "type": "point", "u": 0.5, "v": 0.0, "label": "B" },
//!     { "type": "geodesic", "angles": [0.0, 3.141592653589793] },
//!     { "type": "geodesic", "p": [0.0, 0.0], "q": [0.3, 0.4] },
//!     { "type": "circle", "center": [0.3, 0.0], "rho": 0.5 },
//!     { "type": "equidistant", "xi": 0.5 },
//!     { "type": "horocycle", "ideal_angle": 0.0, "rho_offset": 0.0 },
//!     { "type": "triangle", "vertices": [[0,0],[0.5,0],[0.5,0.5]] }
//!   ]
//! }
//! ```
//!
//! Parsing is strict: unknown fields are rejected, every coordinate is
//! validated against the model (interior points, distinct ideal endpoints,
//! unique labels), and errors name the offending object index and field.
//! Serialization normalizes (ideal angles reduced to `[0, 2pi)`, geodesics in
//! endpoint-angle form), so load -> save is idempotent after the first pass.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::area::{Triangle, TriangleVertex};
use crate::curves::{Equidistant, GeodesicCircle, Horocycle};
use crate::disk::{Geodesic, IdealPoint, ModelParams};
use crate::geodesy::chord_through;

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("scene: {0}")]
    Top(String),
    #[error("object {index}: field `{field}`: {message}")]
    Field {
        index: usize,
        field: &'static str,
        message: String,
    },
    #[error("object {index}: {message}")]
    Object { index: usize, message: String },
}

/// A drawable object, validated against the scene's model parameters.
#[derive(Debug, Clone)]
pub enum SceneObject {
    Point {
        point: crate::disk::DiskPoint,
        label: String,
    },
    Geodesic(Geodesic),
    Circle(GeodesicCircle),
    Equidistant(Equidistant),
    Horocycle(Horocycle),
    Triangle(Triangle),
}

/// A validated scene: model parameters plus objects.
#[derive(Debug, Clone)]
pub struct Scene {
    pub params: ModelParams,
    pub objects: Vec<SceneObject>,
}

fn field_err(index: usize, field: &'static str, message: impl ToString) -> SceneError {
    SceneError::Field {
        index,
        field,
        message: message.to_string(),
    }
}

fn get_f64(map: &Map<String, Value>, index: usize, field: &'static str) -> Result<f64, SceneError> {
    map.get(field)
        .ok_or_else(|| field_err(index, field, "missing"))?
        .as_f64()
        .ok_or_else(|| field_err(index, field, "expected a number"))
}

fn get_pair(v: &Value, index: usize, field: &'static str) -> Result<(f64, f64), SceneError> {
    let arr = v
        .as_array()
        .ok_or_else(|| field_err(index, field, "expected [u, v]"))?;
    if arr.len() != 2 {
        return Err(field_err(index, field, "expected exactly two coordinates"));
    }
    let x = arr[0]
        .as_f64()
        .ok_or_else(|| field_err(index, field, "expected a number"))?;
    let y = arr[1]
        .as_f64()
        .ok_or_else(|| field_err(index, field, "expected a number"))?;
    Ok((x, y))
}

fn check_keys(map: &Map<String, Value>, index: usize, allowed: &[&str]) -> Result<(), SceneError> {
    for key in map.keys() {
        if key != "type" && !allowed.contains(&key.as_str()) {
            return Err(SceneError::Object {
                index,
                message: format!("unknown field `{key}`"),
            });
        }
    }
    Ok(())
}

/// Parse and validate a scene from JSON text.
pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let root: Value = serde_json::from_str(text).map_err(|e| SceneError::Json(e.to_string()))?;
    let top = root
        .as_object()
        .ok_or_else(|| SceneError::Top("expected a JSON object".into()))?;
    for key in top.keys() {
        if !["a", "R", "objects"].contains(&key.as_str()) {
            return Err(SceneError::Top(format!("unknown field `{key}`")));
        }
    }
    let a = top
        .get("a")
        .and_then(Value::as_f64)
        .ok_or_else(|| SceneError::Top("missing or non-numeric field `a`".into()))?;
    let r = top
        .get("R")
        .and_then(Value::as_f64)
        .ok_or_else(|| SceneError::Top("missing or non-numeric field `R`".into()))?;
    let params = ModelParams::new(a, r).map_err(|e| SceneError::Top(e.to_string()))?;

    let raw_objects = top
        .get("objects")
        .and_then(Value::as_array)
        .ok_or_else(|| SceneError::Top("missing field `objects` (array)".into()))?;

    let mut labels: Vec<String> = Vec::new();
    let mut objects = Vec::with_capacity(raw_objects.len());
    for (index, raw) in raw_objects.iter().enumerate() {
        let map = raw.as_object().ok_or_else(|| SceneError::Object {
            index,
            message: "expected a JSON object".into(),
        })?;
        let kind = map
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| field_err(index, "type", "missing or not a string"))?;
        let object = match kind {
            "point" => {
                check_keys(map, index, &["u", "v", "label"])?;
                let u = get_f64(map, index, "u")?;
                let v = get_f64(map, index, "v")?;
                let label = map
                    .get("label")
                    .and_then(Value::as_str)
                    .ok_or_else(|| field_err(index, "label", "missing or not a string"))?
                    .to_string();
                if labels.contains(&label) {
                    return Err(field_err(
                        index,
                        "label",
                        format!("duplicate label `{label}`"),
                    ));
                }
                labels.push(label.clone());
                let point = params
                    .disk_point(u, v)
                    .map_err(|e| field_err(index, "u", e.to_string()))?;
                SceneObject::Point { point, label }
            }
            "geodesic" => {
                check_keys(map, index, &["angles", "p", "q"])?;
                match (map.get("angles"), map.get("p"), map.get("q")) {
                    (Some(angles), None, None) => {
                        let (t0, t1) = get_pair(angles, index, "angles")?;
                        let g = Geodesic::new(IdealPoint::new(t0), IdealPoint::new(t1), &params)
                            .map_err(|e| field_err(index, "angles", e.to_string()))?;
                        SceneObject::Geodesic(g)
                    }
                    (None, Some(p), Some(q)) => {
                        let (pu, pv) = get_pair(p, index, "p")?;
                        let (qu, qv) = get_pair(q, index, "q")?;
                        let p = params
                            .disk_point(pu, pv)
                            .map_err(|e| field_err(index, "p", e.to_string()))?;
                        let q = params
                            .disk_point(qu, qv)
                            .map_err(|e| field_err(index, "q", e.to_string()))?;
                        let g = chord_through(&p, &q, &params)
                            .map_err(|e| field_err(index, "q", e.to_string()))?;
                        SceneObject::Geodesic(g)
                    }
                    _ => {
                        return Err(SceneError::Object {
                            index,
                            message: "geodesic needs either `angles` or both `p` and `q`".into(),
                        })
                    }
                }
            }
            "circle" => {
                check_keys(map, index, &["center", "rho"])?;
                let (cu, cv) = get_pair(
                    map.get("center")
                        .ok_or_else(|| field_err(index, "center", "missing"))?,
                    index,
                    "center",
                )?;
                let rho = get_f64(map, index, "rho")?;
                let center = params
                    .disk_point(cu, cv)
                    .map_err(|e| field_err(index, "center", e.to_string()))?;
                let circle = GeodesicCircle::new(center, rho, &params)
                    .map_err(|e| field_err(index, "rho", e.to_string()))?;
                SceneObject::Circle(circle)
            }
            "equidistant" => {
                check_keys(map, index, &["xi"])?;
                let xi = get_f64(map, index, "xi")?;
                if !xi.is_finite() {
                    return Err(field_err(index, "xi", "must be finite"));
                }
                SceneObject::Equidistant(Equidistant::new(xi))
            }
            "horocycle" => {
                check_keys(map, index, &["ideal_angle", "rho_offset"])?;
                let angle = get_f64(map, index, "ideal_angle")?;
                let rho = get_f64(map, index, "rho_offset")?;
                if !angle.is_finite() {
                    return Err(field_err(index, "ideal_angle", "must be finite"));
                }
                if !rho.is_finite() {
                    return Err(field_err(index, "rho_offset", "must be finite"));
                }
                SceneObject::Horocycle(Horocycle::new(IdealPoint::new(angle), rho))
            }
            "triangle" => {
                check_keys(map, index, &["vertices"])?;
                let arr = map
                    .get("vertices")
                    .and_then(Value::as_array)
                    .ok_or_else(|| field_err(index, "vertices", "expected an array"))?;
                if arr.len() != 3 {
                    return Err(field_err(
                        index,
                        "vertices",
                        "expected exactly three vertices",
                    ));
                }
                let mut vs = [TriangleVertex::Ideal(IdealPoint::new(0.0)); 3];
                for (i, raw_v) in arr.iter().enumerate() {
                    let (u, v) = get_pair(raw_v, index, "vertices")?;
                    let p = params
                        .disk_point(u, v)
                        .map_err(|e| field_err(index, "vertices", e.to_string()))?;
                    vs[i] = TriangleVertex::Interior(p);
                }
                let tri = Triangle::new(vs, &params)
                    .map_err(|e| field_err(index, "vertices", e.to_string()))?;
                SceneObject::Triangle(tri)
            }
            other => {
                return Err(field_err(
                    index,
                    "type",
                    format!("unknown object type `{other}`"),
                ));
            }
        };
        objects.push(object);
    }
    Ok(Scene { params, objects })
}

/// Serialize a scene back to normalized JSON (pretty, keys sorted).
pub fn scene_to_json(scene: &Scene) -> String {
    let objects: Vec<Value> = scene
        .objects
        .iter()
        .map(|obj| match obj {
            SceneObject::Point { point, label } => json!({
                "type": "point", "u": point.u(), "v": point.v(), "label": label,
            }),
            SceneObject::Geodesic(g) => {
                let [e0, e1] = g.endpoints();
                json!({ "type": "geodesic", "angles": [e0.angle(), e1.angle()] })
            }
            SceneObject::Circle(c) => json!({
                "type": "circle", "center": [c.center.u(), c.center.v()], "rho": c.rho,
            }),
            SceneObject::Equidistant(e) => json!({ "type": "equidistant", "xi": e.xi }),
            SceneObject::Horocycle(h) => json!({
                "type": "horocycle",
                "ideal_angle": h.ideal_center.angle(),
                "rho_offset": h.rho_offset,
            }),
            SceneObject::Triangle(t) => {
                let c = t.vertex_coords(&scene.params);
                json!({
                    "type": "triangle",
                    "vertices": [[c[0].0, c[0].1], [c[1].0, c[1].1], [c[2].0, c[2].1]],
                })
            }
        })
        .collect();
    let doc = json!({ "a": scene.params.a, "R": scene.params.r, "objects": objects });
    let mut out = serde_json::to_string_pretty(&doc).expect("scene JSON is always serializable");
    out.push('\n');
    out
}
