//! One function per command, each returning a canonical JSON report.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};
use symvar_core::error::{FanError, SectionError};
use symvar_core::fan::orbit_poset;
use symvar_core::git::{
    ample_witness, closed_orbit_report, git_quotient_report, inclusion_verdict, semistable_stratum,
    support_converse_check, OrbitStratum,
};
use symvar_core::sections::{
    classify_positivity, flag_invariant_data, invariant_basis_wonderful, invariant_dim_wonderful,
    section_decomposition, section_dim_wonderful, semiinvariant_basis_wonderful, MonomialBasisElement, SPicClass,
};
use symvar_core::{Error, Int, Rat};

use crate::document::Job;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    RestrictedRoots,
    Lattices,
    ComponentGroup,
    FanCheck,
    Positivity,
    Sections,
    InvariantsWonderful,
    Basis,
    FlagInvariants,
    Strata,
    Witness,
    Quotient,
    ClosedOrbits,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::RestrictedRoots,
        Command::Lattices,
        Command::ComponentGroup,
        Command::FanCheck,
        Command::Positivity,
        Command::Sections,
        Command::InvariantsWonderful,
        Command::Basis,
        Command::FlagInvariants,
        Command::Strata,
        Command::Witness,
        Command::Quotient,
        Command::ClosedOrbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::RestrictedRoots => "restricted-roots",
            Command::Lattices => "lattices",
            Command::ComponentGroup => "component-group",
            Command::FanCheck => "fan-check",
            Command::Positivity => "positivity",
            Command::Sections => "sections",
            Command::InvariantsWonderful => "invariants-wonderful",
            Command::Basis => "basis",
            Command::FlagInvariants => "flag-invariants",
            Command::Strata => "strata",
            Command::Witness => "witness",
            Command::Quotient => "quotient",
            Command::ClosedOrbits => "closed-orbits",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

/// Settings that come from the command line rather than the document.
#[derive(Clone, Debug)]
pub struct Options {
    pub weyl_limit: usize,
    pub grading_bound: Option<usize>,
    /// Test hook: report a support inclusion failure from `witness`.
    pub inject_support_violation: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            weyl_limit: symvar_core::rootcore::DEFAULT_ENUMERATION_LIMIT,
            grading_bound: None,
            inject_support_violation: false,
        }
    }
}

pub fn int(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn rat(x: &Rat) -> Value {
    if x.is_integer() {
        int(&x.to_integer())
    } else {
        json!(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn vector(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn rat_vector(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn vectors<'a>(vs: impl IntoIterator<Item = &'a Vec<Int>>) -> Value {
    Value::Array(vs.into_iter().map(|v| vector(v)).collect())
}

fn rows(m: &symvar_core::IntMatrix) -> Value {
    Value::Array(m.iter_rows().map(vector).collect())
}

fn indices(v: &[usize]) -> Value {
    json!(v)
}

fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

fn core<E: Into<Error>>(cmd: Command) -> impl Fn(E) -> CliError {
    move |e| CliError::Core {
        context: cmd.name().into(),
        error: e.into(),
    }
}

fn class_value(cls: &SPicClass, name: Option<&str>) -> Value {
    object(vec![
        ("name", name.map_or(Value::Null, |n| json!(n))),
        ("values", vectors(cls.values())),
        (
            "ray_values",
            Value::Array((0..cls.fan().rays().len()).map(|r| rat(&cls.value_at_ray(r))).collect()),
        ),
    ])
}

fn monomial(e: &MonomialBasisElement) -> Value {
    object(vec![
        ("s", vector(&e.s)),
        ("p", vector(&e.p)),
        ("q", vector(&e.q)),
        ("weight", vector(&e.weight)),
    ])
}

fn stratum(s: &OrbitStratum) -> Value {
    object(vec![
        ("face", indices(&s.face)),
        ("support", indices(&s.support)),
        ("parabolic_type", indices(&s.parabolic_type)),
        ("levi_restricted_rank", json!(s.levi_restricted_rank)),
        ("torus_lattice", vectors(&s.torus_lattice)),
    ])
}

fn faces_of(job: &Job, cmd: Command) -> Result<Vec<Vec<usize>>, CliError> {
    match &job.doc.params.face {
        Some(f) => Ok(vec![job.fan.face(f).map_err(core::<FanError>(cmd))?]),
        None => Ok(job.fan.faces().to_vec()),
    }
}

pub fn run_command(job: &Job, cmd: Command, opts: &Options) -> Result<Value, CliError> {
    let fam = &job.family;
    let rr = fam.restricted();
    let inv = rr.involution();
    let fan = &job.fan;
    let body = match cmd {
        Command::RestrictedRoots => object(vec![
            ("rank", json!(rr.rank())),
            ("roots", vectors(rr.roots())),
            ("positive_roots", vectors(rr.positive_roots())),
            ("simple_roots", vectors(rr.simple())),
            ("cartan", rows(rr.cartan())),
            ("reduced", json!(rr.is_reduced())),
            ("doubled", json!((0..rr.rank()).map(|j| rr.is_doubled(j)).collect::<Vec<_>>())),
            ("fundamental_weights", vectors(rr.fundamental_weights())),
            ("delta0", indices(inv.delta0())),
            ("exceptional", indices(inv.exceptional())),
            (
                "weyl_order",
                json!(rr.weyl_group().order(opts.weyl_limit).map_err(core::<symvar_core::error::RootError>(cmd))?),
            ),
        ]),
        Command::Lattices => object(vec![
            ("omega", rows(fam.omega().basis())),
            ("omega_ad", rows(fam.omega_ad().basis())),
            ("omega_H", rows(fam.omega_h().basis())),
            ("pi", rows(fam.pi().basis())),
            ("anti_coweights", rows(fam.anti_coweights())),
            ("restriction_injective", json!(fam.restriction_injective_on_omega())),
        ]),
        Command::ComponentGroup => {
            let g = fam.component_group();
            object(vec![
                ("invariant_factors", vector(&g.invariant_factors)),
                ("order", int(&g.order())),
                ("cosets", vectors(&g.cosets)),
            ])
        }
        Command::FanCheck => {
            let poset = if fan.is_complete() {
                let p = orbit_poset(fan, opts.weyl_limit).map_err(core::<FanError>(cmd))?;
                Value::Array(
                    p.iter()
                        .map(|f| {
                            object(vec![
                                ("rays", indices(&f.rays)),
                                ("orbit_codim", json!(f.orbit_codim)),
                                ("support", indices(&f.support)),
                                ("translates", json!(f.translates)),
                                ("covered_by", indices(&f.covered_by)),
                            ])
                        })
                        .collect(),
                )
            } else {
                Value::Null
            };
            object(vec![
                ("rays", vectors(fan.rays())),
                ("ray_lattice_coords", vectors(fan.ray_lattice_coords())),
                ("cones", Value::Array(fan.cones().iter().map(|c| indices(c)).collect())),
                ("complete", json!(fan.is_complete())),
                ("smooth", json!(fan.is_smooth())),
                ("faces", poset),
            ])
        }
        Command::Positivity => {
            let cls = job.class()?;
            let p = classify_positivity(&cls).map_err(core::<SectionError>(cmd))?;
            object(vec![("class", class_value(&cls, job.class_name())), ("positivity", json!(p.as_str()))])
        }
        Command::Sections => {
            let cls = job.class()?;
            let rep = section_decomposition(&cls).map_err(core::<SectionError>(cmd))?;
            let members = rep
                .a_set
                .iter()
                .zip(&rep.dims)
                .zip(&rep.exponents)
                .map(|((mu, d), a)| {
                    object(vec![
                        ("weight", vector(mu)),
                        ("restricted_coords", rat_vector(&rr.fundamental_coords(mu).expect("in span"))),
                        ("dim", int(d)),
                        ("boundary_exponents", vector(a)),
                    ])
                })
                .collect();
            object(vec![
                ("class", class_value(&cls, job.class_name())),
                ("a_set", Value::Array(members)),
                ("total", int(&rep.total)),
                ("invariant_dim", json!(rep.invariant_dim)),
            ])
        }
        Command::InvariantsWonderful => {
            let w = job.weight()?;
            let sections = if fam.pi().contains(&w) {
                let (total, parts) = section_dim_wonderful(fam, &w).map_err(core::<SectionError>(cmd))?;
                object(vec![
                    ("total", int(&total)),
                    (
                        "parts",
                        Value::Array(
                            parts
                                .iter()
                                .map(|(mu, d)| object(vec![("weight", vector(mu)), ("dim", int(d))]))
                                .collect(),
                        ),
                    ),
                ])
            } else {
                Value::Null
            };
            object(vec![
                ("weight", vector(&w)),
                ("in_omega_H", json!(fam.omega_h().contains(&w))),
                ("in_pi", json!(fam.pi().contains(&w))),
                ("invariant_dim", json!(invariant_dim_wonderful(fam, &w))),
                ("sections", sections),
            ])
        }
        Command::Basis => {
            let w = job.weight()?;
            let semi = semiinvariant_basis_wonderful(fam, &w).map_err(core::<SectionError>(cmd))?;
            let invariant = if fam.omega_h().contains(&w) {
                let b = invariant_basis_wonderful(fam, &w).map_err(core::<SectionError>(cmd))?;
                Value::Array(b.iter().map(monomial).collect())
            } else {
                Value::Null
            };
            object(vec![
                ("weight", vector(&w)),
                ("invariant", invariant),
                ("semiinvariant", Value::Array(semi.iter().map(monomial).collect())),
            ])
        }
        Command::FlagInvariants => {
            let subset = job.doc.params.subset.clone().unwrap_or_default();
            let d = flag_invariant_data(fam, &subset).map_err(core::<SectionError>(cmd))?;
            object(vec![
                ("subset", indices(&subset)),
                ("delta_I", indices(&d.delta_i)),
                ("invariant_generators", vectors(&d.invariant_generators)),
                ("generators", vectors(&d.generators)),
                ("divisor_weight", vector(&d.divisor_weight)),
            ])
        }
        Command::Strata => {
            let strata = faces_of(job, cmd)?
                .iter()
                .map(|f| semistable_stratum(fan, f).map(|s| stratum(&s)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(core::<symvar_core::error::GitError>(cmd))?;
            object(vec![("strata", Value::Array(strata))])
        }
        Command::Witness => {
            let cls = job.class()?;
            let git = core::<symvar_core::error::GitError>(cmd);
            let mut out = Vec::new();
            for face in faces_of(job, cmd)? {
                let (n, mu) = ample_witness(&cls, &face).map_err(&git)?;
                let holds = if opts.inject_support_violation && !fan.face_support(&face).is_empty() {
                    inclusion_verdict(&[], &fan.face_support(&face)).map_err(&git)?
                } else {
                    support_converse_check(&cls, &n, &mu, &face).map_err(&git)?
                };
                out.push(object(vec![
                    ("face", indices(&face)),
                    ("support", indices(&fan.face_support(&face))),
                    ("n", int(&n)),
                    ("mu", vector(&mu)),
                    ("converse_holds", json!(holds)),
                ]));
            }
            object(vec![("class", class_value(&cls, job.class_name())), ("witnesses", Value::Array(out))])
        }
        Command::Quotient => {
            let cls = job.class()?;
            let n = opts.grading_bound.or(job.doc.params.grading_bound).unwrap_or(2);
            let rep = git_quotient_report(&cls, n, opts.weyl_limit).map_err(core::<symvar_core::error::GitError>(cmd))?;
            object(vec![
                ("class", class_value(&cls, job.class_name())),
                ("strata", Value::Array(rep.strata.iter().map(stratum).collect())),
                ("weyl_order", int(&rep.weyl_order)),
                ("stabilizer_orders", vector(&rep.stabilizer_orders)),
                ("grading_bound", json!(n)),
                ("hilbert_function", json!(rep.graded_invariant_dims)),
            ])
        }
        Command::ClosedOrbits => {
            let rep = closed_orbit_report(fan, opts.weyl_limit).map_err(core::<symvar_core::error::GitError>(cmd))?;
            let items = rep
                .iter()
                .map(|c| {
                    object(vec![
                        ("face", indices(&c.face)),
                        ("torus_lattice", vectors(&c.torus_lattice)),
                        ("stabilizer_generators", indices(&c.stabilizer_generators)),
                        ("stabilizer_order", int(&c.stabilizer_order)),
                    ])
                })
                .collect();
            object(vec![("orbit_classes", Value::Array(items))])
        }
    };
    Ok(object(vec![
        ("schema", json!(crate::document::SCHEMA)),
        ("command", json!(cmd.name())),
        ("result", body),
    ]))
}
