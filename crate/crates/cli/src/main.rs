use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use tensor_walks::arith::{rat_to_string, Rational};
use tensor_walks::closed_forms::{
    abelian_walk_egf, abelian_walks, circulant_walks, cyclic_walks, gl2_dims, gl2_poincare,
    paley_closed_form, sl2_dims, sl2_poincare, sn_irrep_dim_formula, wreath_invariants,
    wreath_invariants_egf, PaleyTarget,
};
use tensor_walks::combinat::{factorial, Partition};
use tensor_walks::diagram::{basis_iter, basis_size};
use tensor_walks::group::{parse_spec, GroupData, GroupSpec, LinearModule, ModuleChar, Tier};
use tensor_walks::quiver::{
    bratteli, invariant_counts, mckay_adjacency, walk_count_character, walk_count_matrix,
    walk_counts_character_row,
};
use tensor_walks::series::{poincare_character, poincare_cramer, EgfTruncation, RatFunc};
use tensor_walks::verify::{run_suite, SUITES};
use tensor_walks::{init_thread_pool, Error, Result};

#[derive(Parser)]
#[command(name = "tensor-walks", version, about = "Exact walk counts on McKay quivers and tensor-power invariants")]
struct Cli {
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct GroupArgs {
    /// Group specification, e.g. Z10, Z4xZ2, S4, Z2wrS2, GL2(5), SL2(3), paley(7).
    #[arg(long)]
    group: String,
    /// Module override; only `steinberg` (for GL2/SL2) is recognised.
    #[arg(long)]
    module: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WalkMethod {
    Auto,
    Matrix,
    Character,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PoincareMethod {
    Cramer,
    Character,
    Paper,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Verb {
    /// Number of k-step walks between two irreps.
    Walks {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        k: u32,
        /// Start irrep (index or label).
        #[arg(long, default_value = "0")]
        from: String,
        /// End irrep (index or label).
        #[arg(long, default_value = "0")]
        to: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: WalkMethod,
    },
    /// Multiplicity of every irrep in the k-th tensor power.
    Dims {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        k: u32,
    },
    /// Invariant dimensions for k = 0..=K.
    Invariants {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        k: u32,
    },
    /// Poincare series of an irrep as a reduced rational function.
    Poincare {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long, value_enum, default_value = "character")]
        method: PoincareMethod,
    },
    /// Exponential generating function of walk counts, truncated at `order`.
    Egf {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        order: usize,
        /// Target irrep for abelian groups.
        #[arg(long, default_value = "0")]
        to: String,
    },
    /// Bratteli diagram levels 0..=levels.
    Bratteli {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        levels: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// McKay quiver adjacency matrix.
    Quiver {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Diagram basis of the centralizer algebra of an abelian group.
    Diagalg {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        k: usize,
        /// Restrict to one isotypic target (irrep index or label).
        #[arg(long)]
        target: Option<String>,
        #[arg(long, conflicts_with = "count")]
        list: bool,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Run cross-check suites.
    Verify {
        /// Suite name; repeat for several. Omit, or pass `all`, for every suite.
        #[arg(long)]
        suite: Vec<String>,
    },
}

enum Output {
    Json(Value),
    Text(String),
}

struct Ctx {
    spec: GroupSpec,
    g: Arc<GroupData>,
    v: ModuleChar,
}

fn load(args: &GroupArgs) -> Result<Ctx> {
    let mut spec = parse_spec(&args.group)?;
    match args.module.as_deref().map(str::trim) {
        None | Some("") | Some("default") => {}
        Some("steinberg") => spec = spec.with_steinberg()?,
        Some(other) => {
            return Err(Error::InvalidArgument(format!(
                "unknown module {other:?}; only 'steinberg' is recognised"
            )))
        }
    }
    let (g, v) = spec.build()?;
    Ok(Ctx { spec, g, v })
}

/// Integer coordinates of an irrep label such as `3` or `(2,0)`.
fn label_tuple(label: &str) -> Result<Vec<u32>> {
    label
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("label {label:?} is not a residue tuple")))
        })
        .collect()
}

fn linear(steinberg: bool) -> LinearModule {
    if steinberg {
        LinearModule::Steinberg
    } else {
        LinearModule::Induced
    }
}

/// Closed-form walk count, or `None` when no formula covers this group and pair.
fn closed_walks(cx: &Ctx, k: u32, from: usize, to: usize) -> Result<Option<BigUint>> {
    let label = |i: usize| cx.g.irreps[i].label.as_str();
    let diff = |r: u32| -> Result<u32> {
        let a = label_tuple(label(from))?[0];
        let c = label_tuple(label(to))?[0];
        Ok((c + r - a) % r)
    };
    let trivial_pair = from == 0 && to == 0;
    Ok(match &cx.spec {
        GroupSpec::Cyclic(r) => Some(cyclic_walks(*r, k, 0, diff(*r)?)?),
        GroupSpec::Circulant { r, connection } => Some(circulant_walks(*r, connection, k, diff(*r)?)?),
        GroupSpec::Paley(p) => Some(paley_closed_form(PaleyTarget::from_residue(*p, diff(*p)?)?, k)?),
        GroupSpec::Abelian(_) | GroupSpec::Hypercube(_) => {
            let radii = cx.spec.radii().expect("abelian spec");
            let a = label_tuple(label(from))?;
            let c = label_tuple(label(to))?;
            let t: Vec<u32> = radii.iter().zip(a.iter().zip(&c)).map(|(&r, (&x, &y))| (y + r - x) % r).collect();
            Some(abelian_walks(&radii, k, &t)?)
        }
        GroupSpec::Symmetric(n) if from == 0 => {
            let shape: Partition = label(to)
                .parse()
                .map_err(|_| Error::Consistency(format!("irrep label {} is not a partition", label(to))))?;
            Some(sn_irrep_dim_formula(*n, k, &shape)?)
        }
        GroupSpec::Wreath { r, n } if trivial_pair => Some(wreath_invariants(*r, *n, k)?),
        GroupSpec::Gl2 { q, steinberg } if trivial_pair => Some(gl2_dims(*q, k, linear(*steinberg))?),
        GroupSpec::Sl2 { q, steinberg } if trivial_pair => Some(sl2_dims(*q, k, linear(*steinberg))?),
        _ => None,
    })
}

fn walks(cx: &Ctx, k: u32, from: &str, to: &str, method: WalkMethod) -> Result<BigUint> {
    let (a, c) = (cx.g.irrep_index(from)?, cx.g.irrep_index(to)?);
    let matrix = || -> Result<BigUint> { walk_count_matrix(&mckay_adjacency(&cx.g, &cx.v)?, k, a, c) };
    let character = || walk_count_character(&cx.g, &cx.v, k, a, c);
    match method {
        WalkMethod::Matrix => matrix(),
        WalkMethod::Character => character(),
        WalkMethod::Closed => closed_walks(cx, k, a, c)?.ok_or_else(|| {
            Error::Unsupported(format!("no closed form for walks {from} -> {to} on {}", cx.g.name))
        }),
        WalkMethod::Auto => {
            let mut results = vec![("character", character()?)];
            if cx.g.tier == Tier::FullTable {
                results.push(("matrix", matrix()?));
            }
            if let Some(x) = closed_walks(cx, k, a, c)? {
                results.push(("closed", x));
            }
            let (first, value) = results[0].clone();
            if let Some((m, x)) = results.iter().find(|(_, x)| *x != value) {
                return Err(Error::Consistency(format!(
                    "methods disagree on {}: {first} gives {value}, {m} gives {x}",
                    cx.g.name
                )));
            }
            Ok(value)
        }
    }
}

fn poincare(cx: &Ctx, lambda: &str, method: PoincareMethod) -> Result<(RatFunc, Option<usize>)> {
    let lam = cx.g.irrep_index(lambda)?;
    match method {
        PoincareMethod::Cramer => Ok((poincare_cramer(&mckay_adjacency(&cx.g, &cx.v)?, lam)?, None)),
        PoincareMethod::Character => {
            let (rf, deg) = poincare_character(&cx.g, &cx.v, lam)?;
            Ok((rf, Some(deg)))
        }
        PoincareMethod::Paper => {
            if lam != 0 {
                return Err(Error::Unsupported(
                    "the closed-form Poincare series covers the trivial irrep only".into(),
                ));
            }
            let rf = match cx.spec {
                GroupSpec::Gl2 { q, steinberg } => gl2_poincare(q, linear(steinberg))?,
                GroupSpec::Sl2 { q, steinberg } => sl2_poincare(q, linear(steinberg))?,
                _ => {
                    return Err(Error::Unsupported(format!(
                        "no closed-form Poincare series for {}",
                        cx.g.name
                    )))
                }
            };
            Ok((rf, None))
        }
    }
}

fn egf(cx: &Ctx, order: usize, to: &str) -> Result<EgfTruncation> {
    match &cx.spec {
        GroupSpec::Wreath { r, n } => {
            if cx.g.irrep_index(to)? != 0 {
                return Err(Error::Unsupported("wreath EGF covers invariants only".into()));
            }
            wreath_invariants_egf(*r, *n, order)
        }
        GroupSpec::Cyclic(_) | GroupSpec::Abelian(_) | GroupSpec::Hypercube(_) => {
            let radii = cx.spec.radii().expect("abelian spec");
            // A single Z_r uses G_1 + G_{r-1}, which is not the coordinate module.
            if radii.len() == 1 && matches!(cx.spec, GroupSpec::Cyclic(_)) {
                return Err(Error::Unsupported(
                    "the EGF product applies to the coordinate module; use Z_r x ... or hypercube(n)".into(),
                ));
            }
            let c = label_tuple(&cx.g.irreps[cx.g.irrep_index(to)?].label)?;
            abelian_walk_egf(&radii, &c, order)
        }
        _ => Err(Error::Unsupported(format!("no generating function for {}", cx.g.name))),
    }
}

fn csv_rows<I: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: I) -> String {
    let quote = |s: &str| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.iter().map(|s| quote(s)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<(Output, bool)> {
    let csv = cli.csv;
    let mut ok = true;
    let out = match cli.verb {
        Verb::Walks { g, k, from, to, method } => {
            let cx = load(&g)?;
            let n = walks(&cx, k, &from, &to, method)?.to_string();
            if csv {
                Output::Text(csv_rows(&["count"], [vec![n]]))
            } else {
                Output::Json(json!({ "count": n }))
            }
        }
        Verb::Dims { g, k } => {
            let cx = load(&g)?;
            let row = match cx.g.tier {
                Tier::FullTable => walk_counts_character_row(&cx.g, &cx.v, k, 0)?,
                Tier::InvariantOnly => vec![invariant_counts(&cx.g, &cx.v, k)?.pop().expect("k + 1 entries")],
            };
            let pairs: Vec<(String, String)> =
                row.iter().enumerate().map(|(i, m)| (cx.g.irreps[i].label.clone(), m.to_string())).collect();
            if csv {
                Output::Text(csv_rows(&["irrep", "count"], pairs.into_iter().map(|(a, b)| vec![a, b])))
            } else {
                Output::Json(Value::Array(
                    pairs.into_iter().map(|(l, m)| json!({ "irrep": l, "count": m })).collect(),
                ))
            }
        }
        Verb::Invariants { g, k } => {
            let cx = load(&g)?;
            let counts: Vec<String> = invariant_counts(&cx.g, &cx.v, k)?.iter().map(|x| x.to_string()).collect();
            if csv {
                Output::Text(csv_rows(
                    &["k", "count"],
                    counts.into_iter().enumerate().map(|(i, c)| vec![i.to_string(), c]),
                ))
            } else {
                Output::Json(json!(counts))
            }
        }
        Verb::Poincare { g, lambda, method } => {
            let cx = load(&g)?;
            let (rf, deg) = poincare(&cx, &lambda, method)?;
            let coeffs = |p: &tensor_walks::arith::Poly| p.coeffs().iter().map(rat_to_string).collect::<Vec<_>>();
            if csv {
                Output::Text(csv_rows(
                    &["part", "degree", "coefficient"],
                    [("num", rf.num()), ("den", rf.den())].into_iter().flat_map(|(part, p)| {
                        coeffs(p).into_iter().enumerate().map(move |(i, c)| vec![part.to_string(), i.to_string(), c])
                    }),
                ))
            } else {
                let mut v = json!({
                    "num": rf.num().to_string(),
                    "den": rf.den().to_string(),
                    "num_coeffs": coeffs(rf.num()),
                    "den_coeffs": coeffs(rf.den()),
                });
                if let Some(d) = deg {
                    v["unreduced_den_degree"] = json!(d);
                }
                Output::Json(v)
            }
        }
        Verb::Egf { g, order, to } => {
            let cx = load(&g)?;
            let e = egf(&cx, order, &to)?;
            let rows: Vec<(String, String)> = (0..=order)
                .map(|k| {
                    let taylor = &e.coeffs[k] / Rational::from_integer(factorial(k as u64).into());
                    Ok((rat_to_string(&taylor), e.count(k)?.to_string()))
                })
                .collect::<Result<_>>()?;
            if csv {
                Output::Text(csv_rows(
                    &["k", "coefficient", "count"],
                    rows.into_iter().enumerate().map(|(k, (c, n))| vec![k.to_string(), c, n]),
                ))
            } else {
                let (cs, ns): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
                Output::Json(json!({ "coeffs": cs, "counts": ns }))
            }
        }
        Verb::Bratteli { g, levels, format } => {
            let cx = load(&g)?;
            let b = bratteli(&cx.g, &cx.v, levels)?;
            let labels = &b.labels;
            if csv {
                Output::Text(csv_rows(
                    &["k", "irrep", "multiplicity"],
                    b.levels.iter().enumerate().flat_map(|(k, lv)| {
                        lv.iter().map(move |(l, m)| vec![k.to_string(), labels[*l].clone(), m.to_string()])
                    }),
                ))
            } else if format == GraphFormat::Dot {
                Output::Text(b.to_dot())
            } else {
                Output::Json(b.to_json())
            }
        }
        Verb::Quiver { g, format } => {
            let cx = load(&g)?;
            let a = mckay_adjacency(&cx.g, &cx.v)?;
            if csv {
                let mut header = vec![""];
                header.extend(a.labels.iter().map(String::as_str));
                Output::Text(csv_rows(
                    &header,
                    (0..a.dim()).map(|i| {
                        std::iter::once(a.labels[i].clone())
                            .chain((0..a.dim()).map(|j| a.get(i, j).to_string()))
                            .collect()
                    }),
                ))
            } else if format == GraphFormat::Dot {
                Output::Text(a.to_dot(&format!("{} on {}", cx.g.name, cx.v.label)))
            } else {
                let mut v = a.to_json();
                v["group"] = json!(cx.g.name);
                v["module"] = json!(cx.v.label);
                Output::Json(v)
            }
        }
        Verb::Diagalg { g, k, target, list, count: _, format } => {
            let cx = load(&g)?;
            let radii = cx
                .spec
                .radii()
                .ok_or_else(|| Error::Unsupported(format!("diagram algebras need an abelian group, got {}", cx.g.name)))?;
            let target = match &target {
                Some(t) => Some(label_tuple(&cx.g.irreps[cx.g.irrep_index(t)?].label)?),
                None => None,
            };
            if list {
                let elems: Vec<_> = basis_iter(&radii, k, target.as_deref())?.collect();
                match (csv, format) {
                    (true, _) => Output::Text(csv_rows(
                        &["bottom", "top"],
                        elems.iter().map(|e| {
                            let w = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                            vec![w(&e.bottom), w(&e.top)]
                        }),
                    )),
                    (false, ListFormat::Json) => Output::Json(Value::Array(elems.iter().map(|e| e.to_json()).collect())),
                    (false, ListFormat::Text) => Output::Text(
                        elems.iter().map(|e| format!("{e}\n{}\n", e.render_text())).collect::<Vec<_>>().join("\n"),
                    ),
                    (false, ListFormat::Dot) => Output::Text(elems.iter().map(|e| e.render_dot()).collect()),
                }
            } else {
                let n = basis_size(&radii, k, target.as_deref())?.to_string();
                if csv {
                    Output::Text(csv_rows(&["count"], [vec![n]]))
                } else {
                    Output::Json(json!({ "count": n }))
                }
            }
        }
        Verb::Verify { suite } => {
            let names: Vec<String> = if suite.is_empty() || suite.iter().any(|s| s == "all") {
                SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suite
            };
            let reports = names.iter().map(|s| run_suite(s)).collect::<Result<Vec<_>>>()?;
            ok = reports.iter().all(|r| r.passed());
            if csv {
                Output::Text(csv_rows(
                    &["suite", "check", "passed", "detail"],
                    reports.iter().flat_map(|r| {
                        r.checks.iter().map(|c| {
                            vec![r.suite.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone()]
                        })
                    }),
                ))
            } else {
                Output::Json(Value::Array(reports.iter().map(|r| r.to_json()).collect()))
            }
        }
    };
    Ok((out, ok))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) => 3,
        Error::Consistency(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_thread_pool() {
        eprintln!("tensor-walks: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok((out, ok)) => {
            let mut text = match out {
                Output::Json(v) => serde_json::to_string(&v).expect("JSON values serialise"),
                Output::Text(t) => t,
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("tensor-walks: verification failed");
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprintln!("tensor-walks: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
