use std::sync::Arc;

use serde_json::{json, Value};
use symemb::embeddings::{
    abelianization, canonical_embedding, check_embedding, cross_check, enveloping_ideal,
    enveloping_monoid, essential_pairs, is_very_flat, valuation_cone, VeryFlatReport,
};
use symemb::monoids::{orbit_poset, SphericalMonoid};
use symemb::satake::{spherical_lattice, SphericalLattice};
use symemb::schema::{to_json_rows, to_json_vec, InputDocument, JsonInt};
use symemb::{catalog, IntVec};

use crate::render::text;
use crate::{Args, Command, Failure, Format};

struct Input {
    name: String,
    document: InputDocument,
}

fn load(args: &Args) -> Result<Input, Failure> {
    if let Some(name) = &args.space {
        let entry = catalog::entry(name).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(Input {
            name: entry.name,
            document: entry.document,
        });
    }
    let path = args.input.as_ref().expect("clap requires a source");
    let body = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let document = InputDocument::from_json(&body)?;
    let name = document
        .name
        .clone()
        .unwrap_or_else(|| path.display().to_string());
    Ok(Input { name, document })
}

fn vector(v: &IntVec) -> Value {
    json!(to_json_vec(v))
}

fn vectors(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

fn labels(v: &[usize]) -> Value {
    json!(v.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn pair_value(v: Option<&(IntVec, IntVec)>) -> Value {
    v.map_or(Value::Null, |(a, b)| json!([vector(a), vector(b)]))
}

fn input_monoid(input: &Input, sl: &Arc<SphericalLattice>) -> Result<Option<SphericalMonoid>, Failure> {
    input
        .document
        .monoid_generators()
        .map(|g| SphericalMonoid::new(sl.clone(), g).map_err(Failure::from))
        .transpose()
}

fn very_flat_value(r: &VeryFlatReport) -> Value {
    json!({
        "verdict": r.very_flat(),
        "flat": r.flat,
        "submonoid": r.submonoid,
        "diagonal": r.diagonal,
        "bounded": r.bounded,
        "exact": r.exact,
        "minimal_count": r.minimal_count,
        "witnesses": {
            "flat": pair_value(r.flat_witness.as_ref()),
            "submonoid": pair_value(r.submonoid_witness.as_ref()),
        },
    })
}

pub fn run(args: &Args) -> Result<String, Failure> {
    let input = load(args)?;
    let ird = input.document.iroot_datum()?;
    let sl = Arc::new(spherical_lattice(&ird)?);
    let bound = args.bound;
    let mut dot = None;
    let mut rejected = None;

    let body = match args.command {
        Command::Validate => {
            let mut out = json!({"axioms": "ok", "t_coefficients": "ok"});
            ird.t_coefficients()?;
            if let Some(m) = input_monoid(&input, &sl)? {
                let report = check_embedding(&m);
                out["embedding"] = json!({
                    "valid": report.is_valid(),
                    "closed": report.closed.closed,
                    "closed_caveat": report.closed.caveat,
                    "saturated": report.saturated,
                    "generates": report.generates,
                    "failures": report.failures(),
                    "witness": pair_value(report.closed.witness.as_ref()),
                });
                if !report.is_valid() {
                    rejected = Some(format!("not an affine embedding: {}", report.failures().join(", ")));
                }
            }
            out
        }
        Command::SphericalRoots => {
            let weights = sl.datum().fundamental_weights();
            let bar_weights: Vec<Value> = ird
                .white_prime()
                .iter()
                .map(|&i| {
                    let w = ird.bar_rational(&weights[i]);
                    json!(w.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                })
                .collect();
            json!({
                "white_representatives": labels(ird.white_prime()),
                "black": labels(ird.black()),
                "lattice_basis": vectors(sl.lattice().basis()),
                "bar_alpha": vectors(sl.bar_alpha()),
                "spherical_roots": vectors(sl.spherical_roots()),
                "bar_fundamental_weights": bar_weights,
                "spherical_cartan": to_json_rows(sl.cartan()),
                "spherical_type": sl.cartan_type().to_string(),
                "semisimple": sl.is_semisimple(),
            })
        }
        Command::ValuationCone => {
            let v = valuation_cone(&sl);
            json!({
                "coordinates": "dual basis of the spherical lattice basis",
                "normals": vectors(&v.normals),
                "rays": vectors(v.cone.rays()),
                "lineality": vectors(v.cone.lineality()),
                "dim": v.cone.dim(),
            })
        }
        Command::Orbits => {
            let given = input_monoid(&input, &sl)?;
            let em = match given {
                Some(_) => None,
                None => Some(enveloping_monoid(&sl)?),
            };
            let (monoid, which) = match (&given, &em) {
                (Some(m), _) => (m, "input"),
                (None, Some(em)) => (em.monoid(), "enveloping"),
                (None, None) => unreachable!(),
            };
            let poset = orbit_poset(monoid, bound)?;
            dot = Some(poset.to_dot());
            let nodes: Vec<Value> = poset
                .nodes()
                .iter()
                .enumerate()
                .map(|(i, n)| {
                    json!({
                        "index": i,
                        "dim": n.face.dim,
                        "face_rays": vectors(n.face_rays()),
                        "open": i == poset.open_orbit(),
                    })
                })
                .collect();
            json!({
                "monoid": which,
                "generators": vectors(monoid.generators()),
                "orbits": poset.len(),
                "nodes": nodes,
                "covers": poset.covers(),
            })
        }
        Command::Canonical => {
            let c = canonical_embedding(&sl)?;
            dot = Some(c.to_dot());
            json!({
                "orbits": c.orbit_count(),
                "subsets": c.subsets.iter().map(|s| labels(s)).collect::<Vec<_>>(),
                "covers": c.covers(),
                "chart_rays": vectors(c.chart_cone.rays()),
                "chart_hilbert_basis": vectors(&c.chart_basis),
                "index": JsonInt(c.index.clone()),
                "smooth": c.smooth,
            })
        }
        Command::EssentialPairs => {
            let pairs = essential_pairs(&sl);
            let rows: Vec<Value> = pairs
                .iter()
                .map(|p| json!({"J1": labels(&p.j1), "J2": labels(&p.j2), "essential": p.essential}))
                .collect();
            json!({
                "pairs": rows,
                "essential": pairs.iter().filter(|p| p.essential).count(),
                "total": pairs.len(),
            })
        }
        Command::Enveloping => {
            let em = enveloping_monoid(&sl)?;
            let mut out = json!({"generators": vectors(em.monoid().generators())});
            if let Some((j1, j2)) = input.document.pair()? {
                let ideal = enveloping_ideal(&em, &j1, &j2, bound)?;
                out["ideal"] = json!({
                    "J1": labels(&ideal.j1),
                    "J2": labels(&ideal.j2),
                    "complement_rays": vectors(ideal.complement.rays()),
                    "prime": ideal.prime,
                    "closed": ideal.closed,
                    "closed_rational": ideal.closed_rational,
                    "empty": ideal.empty,
                    "witness": pair_value(ideal.witness.as_ref()),
                });
            } else {
                let cc = cross_check(&em, bound)?;
                let rows: Vec<Value> = cc
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "J1": labels(&r.pair.j1),
                            "J2": labels(&r.pair.j2),
                            "essential": r.pair.essential,
                            "prime": r.ideal.prime,
                            "closed": r.ideal.closed,
                            "closed_rational": r.ideal.closed_rational,
                            "empty": r.ideal.empty,
                            "agrees": r.agrees,
                        })
                    })
                    .collect();
                out["cross_check"] = json!({
                    "rows": rows,
                    "all_agree": cc.all_agree(),
                    "all_agree_rational": cc.all_agree_rational(),
                    "essential": cc.essential_count,
                    "nonzero_essential": cc.nonzero_essential_count,
                    "closed_prime_ideals": cc.face_ideal_count,
                    "counts_agree": cc.counts_agree(),
                });
            }
            out
        }
        Command::Abelianization => {
            let (report, ab_value) = match input_monoid(&input, &sl)? {
                Some(m) => {
                    let ab = abelianization(&m);
                    let v = json!({
                        "monoid": "input",
                        "central_generators": vectors(ab.central_generators()),
                        "units": vectors(ab.units().basis()),
                        "minimal_elements": vectors(&ab.minimal_elements(bound)),
                    });
                    (is_very_flat(&m, bound), v)
                }
                None => {
                    let em = enveloping_monoid(&sl)?;
                    let ab = abelianization(em.monoid());
                    let v = json!({
                        "monoid": "enveloping",
                        "central_generators": vectors(ab.central_generators()),
                        "units": vectors(ab.units().basis()),
                        "minimal_elements": vectors(&ab.minimal_elements(bound)),
                    });
                    (em.very_flat(bound), v)
                }
            };
            let mut out = ab_value;
            out["very_flat"] = very_flat_value(&report);
            out
        }
        Command::Hilbert => match input_monoid(&input, &sl)? {
            Some(m) => json!({
                "monoid": "saturation of input",
                "hilbert_basis": vectors(m.saturation_basis()),
            }),
            None => json!({
                "monoid": "dominant",
                "hilbert_basis": vectors(sl.dominant_generators()),
            }),
        },
    };

    let mut out = json!({"command": command_name(args.command), "space": input.name});
    if uses_bound(args.command) {
        out["bound"] = json!(bound);
    }
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    let rendered = match args.format {
        Format::Json => serde_json::to_string_pretty(&out).expect("values serialize") + "\n",
        Format::Text => text(args.command, &out),
        Format::Dot => dot.ok_or_else(|| {
            Failure::Usage(format!(
                "--format dot is only available for orbits and canonical, not {}",
                command_name(args.command)
            ))
        })?,
    };
    match rejected {
        Some(reason) => Err(Failure::Rejected { output: rendered, reason }),
        None => Ok(rendered),
    }
}

fn uses_bound(c: Command) -> bool {
    matches!(
        c,
        Command::Orbits | Command::Enveloping | Command::Abelianization
    )
}

pub fn command_name(c: Command) -> &'static str {
    match c {
        Command::Validate => "validate",
        Command::SphericalRoots => "spherical-roots",
        Command::ValuationCone => "valuation-cone",
        Command::Orbits => "orbits",
        Command::Canonical => "canonical",
        Command::EssentialPairs => "essential-pairs",
        Command::Enveloping => "enveloping",
        Command::Abelianization => "abelianization",
        Command::Hilbert => "hilbert",
    }
}
