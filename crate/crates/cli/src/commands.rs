use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use brachyon::brace::enumerate_braces_on;
use brachyon::construct::{
    build_involutive, build_irretractable, build_solution, check_square_free_spec,
    classify_solutions, rack_from_group, ConstructionSpec, InvolutiveSpec, OrbitChoice,
};
use brachyon::format::Document;
use brachyon::group::{subgroup_closure, FiniteGroup, GroupOps, Subgroup};
use brachyon::solution::permutation_brace;
use brachyon::{Caps, SkewBrace, Solution};

use crate::report::{Failure, Report};
use crate::{BraceSource, Command, Emit, Format, Named, Options, RackSubgroup, CAP_ORDER_ENV};

type Outcome = Result<Report, Failure>;

pub fn run(command: &Command, opts: &Options) -> Outcome {
    let caps = caps(opts)?;
    match command {
        Command::Verify => verify(opts),
        Command::Construct => construct(opts),
        Command::ConstructInvolutive => construct_involutive(opts),
        Command::ConstructIrretractable { source, reps } => {
            construct_irretractable(source, reps, opts)
        }
        Command::Classify { source } => classify(source, opts, &caps),
        Command::Racks { reps, subgroup } => racks(reps, *subgroup, opts),
        Command::EnumerateBraces { group } => enumerate(group.as_deref(), opts, &caps),
        Command::PermutationBrace => perm_brace(opts),
        Command::Examples { name, param, emit } => examples(*name, *param, emit, opts),
    }
}

/// Module defaults, then the environment override, then flags.
fn caps(opts: &Options) -> Result<Caps, Failure> {
    let mut caps = Caps::default();
    if let Ok(v) = std::env::var(CAP_ORDER_ENV) {
        let order = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{CAP_ORDER_ENV} must be a number, got {v:?}")))?;
        caps = caps.with_order_cap(order);
    }
    if let Some(order) = opts.max_order {
        caps = caps.with_order_cap(order);
    }
    if let Some(k) = opts.cap_families {
        if k == 0 {
            return Err(Failure::Usage("--cap-families must be at least 1".into()));
        }
        caps.families_per_orbit = k;
    }
    Ok(caps)
}

fn input(opts: &Options) -> Result<&Path, Failure> {
    opts.input
        .as_deref()
        .ok_or_else(|| Failure::Usage("--input is required".into()))
}

fn read_doc(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Document::from_json(&text)?)
}

fn wrong_kind(doc: &Document, expected: &str) -> Failure {
    Failure::invalid(format!("expected a {expected} file, got {}", doc.kind()))
}

fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Text => doc.to_text(),
    }
}

fn write_doc(path: &Path, doc: &Document, format: Format) -> Result<(), Failure> {
    fs::write(path, render(doc, format)).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Write `doc` to `--output` if given, and note it in the report.
fn maybe_write(report: &mut Report, doc: &Document, opts: &Options) -> Result<(), Failure> {
    if let Some(path) = &opts.output {
        write_doc(path, doc, opts.format)?;
        report.push("written", path.display());
    }
    Ok(())
}

/// Directory for verbs that write several files; the working directory by default.
fn output_dir(opts: &Options) -> Result<PathBuf, Failure> {
    let dir = opts.output.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    Ok(dir)
}

fn named_brace(name: Named, param: Option<usize>) -> Result<SkewBrace, Failure> {
    let positive = |default: usize| match param.unwrap_or(default) {
        0 => Err(Failure::Usage("--param must be positive".into())),
        n => Ok(n),
    };
    let fixed = |label: &str| match param {
        Some(_) => Err(Failure::Usage(format!("{label} takes no --param"))),
        None => Ok(()),
    };
    Ok(match name {
        Named::Trivial => SkewBrace::trivial(&FiniteGroup::cyclic(positive(2)?)),
        Named::Opposite => {
            let n = positive(3)?;
            if n > 5 {
                return Err(Failure::Usage("opposite accepts --param up to 5".into()));
            }
            SkewBrace::opposite(&FiniteGroup::symmetric(n))
        }
        Named::CyclicFlip => SkewBrace::cyclic_flip(positive(2)?),
        Named::Order21 => {
            fixed("order21")?;
            SkewBrace::order21()
        }
        Named::Vendramin => {
            fixed("vendramin")?;
            SkewBrace::vendramin()
        }
    })
}

fn load_brace(source: &BraceSource, opts: &Options) -> Result<SkewBrace, Failure> {
    if let Some(name) = source.name {
        return named_brace(name, source.param);
    }
    let path = source
        .brace
        .as_deref()
        .or(opts.input.as_deref())
        .ok_or_else(|| Failure::Usage("give --brace, --input or --name".into()))?;
    match read_doc(path)? {
        Document::Brace(b) => Ok(b),
        other => Err(wrong_kind(&other, "skew_brace")),
    }
}

fn parse_group(text: &str) -> Result<FiniteGroup, Failure> {
    let usage = || Failure::Usage(format!("unknown group {text:?}"));
    let (family, arg) = match text.split_once(':') {
        Some((f, a)) => (f, Some(a.parse::<usize>().map_err(|_| usage())?)),
        None => (text, None),
    };
    let arg = |max: usize| match arg {
        Some(n) if (1..=max).contains(&n) => Ok(n),
        _ => Err(usage()),
    };
    Ok(match family {
        "cyclic" => FiniteGroup::cyclic(arg(usize::MAX)?),
        "symmetric" => FiniteGroup::symmetric(arg(5)?),
        "dihedral" => FiniteGroup::dihedral(arg(usize::MAX / 2)?),
        "elementary" => FiniteGroup::elementary_abelian_2(arg(10)? as u32),
        "quaternion" if text == "quaternion" => FiniteGroup::quaternion(),
        _ => return Err(usage()),
    })
}

fn solution_report(s: &Solution) -> Report {
    let mut r = Report::new();
    r.push("size", s.size());
    let ybe = s.verify_ybe();
    match ybe.counterexample {
        None => r.push("ybe", "ok"),
        Some((x, y, z)) => r.push("ybe", format!("fails at ({x}, {y}, {z})")),
    };
    let nondegenerate = s.is_nondegenerate();
    r.flag("nondegenerate", nondegenerate);
    let involutive = s.is_involutive();
    r.flag("involutive", involutive);
    r.flag("square-free", s.is_square_free());
    if nondegenerate && involutive {
        if let Ok(irr) = s.is_irretractable() {
            r.flag("irretractable", irr);
        }
    }
    r
}

fn brace_report(b: &SkewBrace) -> Report {
    let mut r = Report::new();
    r.push("order", b.order())
        .flag("left-brace", b.is_left_brace())
        .flag("trivial", b.is_trivial())
        .flag("two-sided", b.is_two_sided())
        .push("socle-order", b.socle().order())
        .push("theta-orbits", b.theta_orbits().len());
    r
}

fn verify(opts: &Options) -> Outcome {
    let path = input(opts)?;
    let doc = read_doc(path)?;
    let mut r = Report::new();
    r.push("kind", doc.kind()).push("valid", "yes");
    match &doc {
        Document::Group(g) => {
            r.push("order", g.order()).flag("abelian", g.is_abelian());
        }
        Document::Brace(b) => {
            r.extend(brace_report(b));
        }
        Document::Solution(s) => {
            r.extend(solution_report(s));
            if s.is_nondegenerate() {
                r.push(
                    "permutation-brace-order",
                    permutation_brace(s)?.brace.order(),
                );
            }
        }
        Document::Rack(q) => {
            r.push("size", q.size())
                .flag("rack", q.is_rack())
                .flag("quandle", q.is_quandle());
        }
        Document::Spec(s) => {
            r.push("size", s.size())
                .push("orbits", s.orbits.len())
                .flag("square-free", check_square_free_spec(s)?);
        }
        Document::InvolutiveSpec(s) => {
            r.push("size", s.size()).push("orbits", s.orbits.len());
        }
    }
    Ok(r)
}

fn finish_solution(s: Solution, opts: &Options) -> Outcome {
    let mut r = solution_report(&s);
    maybe_write(&mut r, &Document::Solution(s), opts)?;
    Ok(r)
}

fn construct(opts: &Options) -> Outcome {
    let spec = match read_doc(input(opts)?)? {
        Document::Spec(s) => s,
        other => return Err(wrong_kind(&other, "construction_spec")),
    };
    finish_solution(build_solution(&spec)?.solution, opts)
}

fn construct_involutive(opts: &Options) -> Outcome {
    let spec = match read_doc(input(opts)?)? {
        Document::InvolutiveSpec(s) => s,
        other => return Err(wrong_kind(&other, "involutive_spec")),
    };
    finish_solution(build_involutive(&spec)?.solution, opts)
}

fn nonzero_lambda_reps(b: &SkewBrace) -> Vec<usize> {
    b.lambda_orbits()
        .iter()
        .map(|o| o[0])
        .filter(|&a| a != 0)
        .collect()
}

fn construct_irretractable(source: &BraceSource, reps: &[usize], opts: &Options) -> Outcome {
    let b = load_brace(source, opts)?;
    let reps = if reps.is_empty() {
        nonzero_lambda_reps(&b)
    } else {
        reps.to_vec()
    };
    if let Some(&a) = reps.iter().find(|&&a| a >= b.order()) {
        return Err(Failure::invalid(format!("representative {a} out of range")));
    }
    finish_solution(build_irretractable(&b, &reps)?.solution, opts)
}

fn classify(source: &BraceSource, opts: &Options, caps: &Caps) -> Outcome {
    let b = load_brace(source, opts)?;
    let classes = classify_solutions(&b, caps, opts.max_size)?;
    let dir = output_dir(opts)?;
    let mut r = Report::new();
    r.push("brace-order", b.order())
        .push("classes", classes.len());
    for (k, c) in classes.iter().enumerate() {
        let s = &c.solution;
        let name = format!("solution-{:03}.{}", k + 1, opts.format.extension());
        write_doc(
            &dir.join(&name),
            &Document::Solution(s.clone()),
            opts.format,
        )?;
        r.push(
            format!("class {}", k + 1),
            format!(
                "size={} involutive={} square-free={} file={name}",
                s.size(),
                crate::report::yes_no(s.is_involutive()),
                crate::report::yes_no(s.is_square_free())
            ),
        );
    }
    r.push("written", dir.display());
    Ok(r)
}

fn racks(reps: &[usize], subgroup: RackSubgroup, opts: &Options) -> Outcome {
    let rack = match read_doc(input(opts)?)? {
        Document::Group(g) => {
            if reps.is_empty() {
                return Err(Failure::Usage("--reps is required for a group".into()));
            }
            if let Some(&x) = reps.iter().find(|&&x| x >= g.order()) {
                return Err(Failure::invalid(format!("element {x} out of range")));
            }
            let families: Vec<Vec<Subgroup>> = reps
                .iter()
                .map(|&x| {
                    vec![match subgroup {
                        RackSubgroup::Centralizer => g.centralizer(x),
                        RackSubgroup::Cyclic => subgroup_closure(&g, &[x]),
                        RackSubgroup::Trivial => Subgroup::trivial(g.order()),
                    }]
                })
                .collect();
            rack_from_group(&g, reps, &families)?.rack
        }
        Document::Solution(s) => s.derived_rack()?,
        other => return Err(wrong_kind(&other, "group or solution")),
    };
    let mut r = Report::new();
    r.push("size", rack.size())
        .flag("rack", rack.is_rack())
        .flag("quandle", rack.is_quandle())
        .flag("trivial", rack.is_trivial());
    maybe_write(&mut r, &Document::Rack(rack), opts)?;
    Ok(r)
}

fn enumerate(group: Option<&str>, opts: &Options, caps: &Caps) -> Outcome {
    let a = match (group, &opts.input) {
        (Some(text), None) => parse_group(text)?,
        (None, Some(path)) => match read_doc(path)? {
            Document::Group(g) => g,
            other => return Err(wrong_kind(&other, "group")),
        },
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --group and --input".into(),
            ))
        }
    };
    let braces = enumerate_braces_on(&a, caps)?;
    let dir = output_dir(opts)?;
    let mut r = Report::new();
    r.push("group-order", a.order())
        .push("braces", braces.len());
    for (k, b) in braces.iter().enumerate() {
        let name = format!("brace-{:03}.{}", k + 1, opts.format.extension());
        write_doc(&dir.join(&name), &Document::Brace(b.clone()), opts.format)?;
        r.push(
            format!("brace {}", k + 1),
            format!(
                "left-brace={} trivial={} socle-order={} file={name}",
                crate::report::yes_no(b.is_left_brace()),
                crate::report::yes_no(b.is_trivial()),
                b.socle().order()
            ),
        );
    }
    r.push("written", dir.display());
    Ok(r)
}

fn perm_brace(opts: &Options) -> Outcome {
    let s = match read_doc(input(opts)?)? {
        Document::Solution(s) => s,
        other => return Err(wrong_kind(&other, "solution")),
    };
    let pb = permutation_brace(&s)?;
    let mut r = brace_report(&pb.brace);
    maybe_write(&mut r, &Document::Brace(pb.brace), opts)?;
    Ok(r)
}

/// λ-orbit representatives `e3` and `e6` of the order-64 brace, whose
/// orbits carry its size-8 irretractable solution.
const VENDRAMIN_REPS: [usize; 2] = [1 << 2, 1 << 5];

/// The spec behind an example: for the order-64 brace the irretractable
/// construction on two orbits, otherwise every non-zero `Θ`-orbit with
/// trivial subgroups.
fn example_spec(name: Named, b: &SkewBrace) -> Result<Document, Failure> {
    if name == Named::Vendramin {
        let orbits = VENDRAMIN_REPS
            .into_iter()
            .map(|a| OrbitChoice {
                rep: a,
                subgroups: vec![b.lambda_stabilizer(a)],
            })
            .collect();
        return Ok(Document::InvolutiveSpec(InvolutiveSpec::new(
            b.clone(),
            orbits,
        )?));
    }
    let n = b.order();
    let reps: Vec<usize> = b
        .theta_orbits()
        .iter()
        .map(|o| o[0])
        .filter(|&a| a != 0)
        .collect();
    let reps = if reps.is_empty() { vec![0] } else { reps };
    let orbits = reps
        .into_iter()
        .map(|a| OrbitChoice {
            rep: a,
            subgroups: vec![Subgroup::trivial(n * n)],
        })
        .collect();
    Ok(Document::Spec(ConstructionSpec::new(b.clone(), orbits)?))
}

fn examples(name: Named, param: Option<usize>, emit: &[Emit], opts: &Options) -> Outcome {
    let b = named_brace(name, param)?;
    let spec = example_spec(name, &b)?;
    let solution = match &spec {
        Document::InvolutiveSpec(s) => build_involutive(s)?.solution,
        Document::Spec(s) => build_solution(s)?.solution,
        _ => unreachable!("example specs are specs"),
    };
    let mut r = Report::new();
    r.push("name", format!("{name:?}").to_lowercase())
        .push("brace-order", b.order())
        .flag("left-brace", b.is_left_brace())
        .push("socle-order", b.socle().order())
        .push("spec", spec.kind());
    r.extend(solution_report(&solution));
    let dir = output_dir(opts)?;
    let stem = match name {
        Named::CyclicFlip => "cyclic-flip",
        Named::Trivial => "trivial",
        Named::Opposite => "opposite",
        Named::Order21 => "order21",
        Named::Vendramin => "vendramin",
    };
    let mut written = Vec::new();
    for e in emit {
        let (label, doc) = match e {
            Emit::Brace => ("brace", Document::Brace(b.clone())),
            Emit::Solution => ("solution", Document::Solution(solution.clone())),
            Emit::Spec => ("spec", spec.clone()),
        };
        let file = format!("{stem}-{label}.{}", opts.format.extension());
        write_doc(&dir.join(&file), &doc, opts.format)?;
        written.push(file);
    }
    if !written.is_empty() {
        r.push("written", written.join(", "));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_parse() {
        assert_eq!(parse_group("cyclic:4").unwrap().order(), 4);
        assert_eq!(parse_group("quaternion").unwrap().order(), 8);
        assert_eq!(parse_group("elementary:3").unwrap().order(), 8);
        assert_eq!(parse_group("dihedral:4").unwrap().order(), 8);
        for bad in [
            "cyclic",
            "cyclic:0",
            "quaternion:2",
            "symmetric:9",
            "free:2",
        ] {
            assert!(matches!(parse_group(bad), Err(Failure::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn example_specs_build_small_solutions() {
        let b = SkewBrace::trivial(&FiniteGroup::cyclic(2));
        let Document::Spec(s) = example_spec(Named::Trivial, &b).unwrap() else {
            panic!("trivial brace gives a construction spec");
        };
        assert_eq!(s.size(), 4);
        let Document::InvolutiveSpec(s) =
            example_spec(Named::Vendramin, &SkewBrace::vendramin()).unwrap()
        else {
            panic!("vendramin gives an involutive spec");
        };
        assert_eq!(s.size(), 8);
    }
}
