use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crystal_poly::config::parse_lambda_text;
use crystal_poly::inequality::{self, Closure, DEFAULT_CAP};
use crystal_poly::oracle::{self, CrosscheckReport};
use crystal_poly::shapes;
use crystal_poly::{Config, Crystal, LinearForm, Setting, Weight, WeightSpec, ZVector};

/// Polyhedral realizations of affine crystal bases.
///
/// The config is a JSON file `{"family": "A1", "n": 3, "iota_word": "2 1 3",
/// "lambda": {"1": 1}}`. The word lists iota from position 1 onwards and
/// repeats, so "2 1 3" is iota = (..., 3, 1, 2, 3, 1, 2). `lambda` may also be
/// "inf". Families are A1, C1, A2, D2.
#[derive(Parser)]
#[command(name = "crystal-poly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an inequality set and write it as JSON.
    GenIneq {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "comb")]
        mode: Mode,
        /// Largest position allowed in a form.
        #[arg(long, default_value_t = 12)]
        window: usize,
        /// Restrict to one index k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide membership of a vector in the image of B(lambda) or B(infinity).
    Check {
        config: PathBuf,
        /// `[a1,a2,...]` by position or `{(s,k):v,...}`.
        #[arg(long)]
        vector: String,
        /// `1:1,2:1`, `0` or `inf`; overrides the config.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Count elements reached by at most `depth` lowering operators, by weight.
    Enumerate {
        config: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compute epsilon*_k for every k.
    EpsilonStar {
        config: PathBuf,
        #[arg(long)]
        vector: String,
        #[arg(long, value_enum, default_value = "forms")]
        method: Method,
    },
    /// Compare forms with the operator closure and the rewriting closures.
    Crosscheck {
        config: PathBuf,
        #[arg(long, default_value_t = 5)]
        depth: usize,
        /// Form window; defaults to depth times the word length.
        #[arg(long)]
        window: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sprime,
    Shat,
    Comb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Forms,
    Oracle,
    Both,
}

struct Loaded {
    setting: Setting,
    lambda: WeightSpec,
}

fn load(path: &Path, lambda: Option<&str>) -> Result<Loaded> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let config = Config::from_json(&text)?;
    let setting = config.setting()?;
    let lambda = match lambda {
        Some(t) => parse_lambda_text(t, setting.n())?,
        None => config.weight()?,
    };
    Ok(Loaded { setting, lambda })
}

fn sorted(forms: impl IntoIterator<Item = LinearForm>) -> Vec<LinearForm> {
    let mut v: Vec<LinearForm> = forms.into_iter().collect();
    v.sort_by(|a, b| a.display_cmp(b));
    v.dedup();
    v
}

fn form_json(st: &Setting, f: &LinearForm) -> serde_json::Value {
    let j = f.to_json(st);
    json!({ "text": f.display_with(st), "constant": j.constant, "terms": j.terms })
}

fn emit(value: &serde_json::Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn check_k(st: &Setting, k: usize) -> Result<()> {
    if k == 0 || k > st.n() {
        bail!("k = {k} is out of range 1..={}", st.n());
    }
    Ok(())
}

fn gen_ineq(
    config: &Path,
    mode: Mode,
    window: usize,
    k: Option<usize>,
    lambda: Option<&str>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let Loaded { setting: st, lambda } = load(config, lambda)?;
    if let Some(k) = k {
        check_k(&st, k)?;
    }
    let finite = lambda.finite().map(<[i64]>::to_vec);
    let (forms, converged): (Vec<LinearForm>, bool) = match mode {
        Mode::Sprime => {
            let c: Closure = match k {
                Some(k) => inequality::xi_star_k(&st, k, window),
                None => inequality::xi_infinity(&st, window),
            };
            (c.forms.into_iter().collect(), c.converged)
        }
        Mode::Shat => {
            let Some(l) = &finite else {
                bail!("--mode shat needs a finite lambda");
            };
            let c = match k {
                Some(k) => inequality::xi_lambda_k(&st, l, k, window),
                None => inequality::xi_lambda(&st, l, window),
            };
            (c.forms.into_iter().collect(), c.converged)
        }
        Mode::Comb => match (k, &finite) {
            (Some(k), Some(l)) => {
                let set = shapes::comb_lambda(&st, k, l[k - 1], window);
                (set.entries.into_iter().map(|(_, f)| f).collect(), set.complete)
            }
            (Some(k), None) => {
                let set = shapes::comb_lambda(&st, k, 0, window);
                (set.entries.into_iter().map(|(_, f)| f).collect(), set.complete)
            }
            (None, _) => (oracle::comb_forms(&st, &lambda, window), true),
        },
    };
    let forms = sorted(forms);
    let value = json!({
        "family": st.ty.name(),
        "word": st.seq.word(),
        "lambda": lambda.label(),
        "mode": match mode { Mode::Sprime => "sprime", Mode::Shat => "shat", Mode::Comb => "comb" },
        "k": k,
        "window": window,
        "converged": converged,
        "count": forms.len(),
        "forms": forms.iter().map(|f| form_json(&st, f)).collect::<Vec<_>>(),
    });
    emit(&value, out)?;
    if !converged {
        eprintln!("closure did not converge within {DEFAULT_CAP} visits");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn check(config: &Path, vector: &str, lambda: Option<&str>, window: Option<usize>) -> Result<ExitCode> {
    let Loaded { setting: st, lambda } = load(config, lambda)?;
    let x = ZVector::parse(vector, &st)?;
    let period = st.seq.period();
    let window = window.unwrap_or((x.max_pos().div_ceil(period) + 1) * period);
    let forms = sorted(oracle::comb_forms(&st, &lambda, window));
    println!("vector {}", x.display_with(&st));
    println!("lambda {}, {} forms within window {window}", lambda.label(), forms.len());
    match inequality::membership(&x, &forms) {
        None => println!("member"),
        Some(f) => {
            println!("not a member");
            println!("violated: {} = {}", f.display_with(&st), f.eval(&x));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn weight_label(w: &Weight) -> String {
    let parts: Vec<String> = w.alpha.iter().map(|a| a.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn enumerate(config: &Path, depth: usize, lambda: Option<&str>, as_json: bool) -> Result<ExitCode> {
    let Loaded { setting: st, lambda } = load(config, lambda)?;
    let levels = oracle::generate_levels(&st, &lambda, depth);
    let c = Crystal::new(&st, lambda.clone());
    let mut graded: Vec<BTreeMap<Weight, usize>> = Vec::new();
    for level in &levels {
        let mut m = BTreeMap::new();
        for a in level {
            *m.entry(c.wt(a)).or_insert(0) += 1;
        }
        graded.push(m);
    }
    if as_json {
        let value = json!({
            "family": st.ty.name(),
            "word": st.seq.word(),
            "lambda": lambda.label(),
            "levels": graded.iter().enumerate().map(|(d, m)| json!({
                "size": d,
                "count": levels[d].len(),
                "weights": m.iter().map(|(w, n)| json!({ "alpha": w.alpha, "count": n })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        emit(&value, None)?;
        return Ok(ExitCode::SUCCESS);
    }
    println!("{} word {:?} lambda {}", st.ty.name(), st.seq.word(), lambda.label());
    println!("weight lambda + sum c_i alpha_i, listed as [c_1,...,c_n]");
    for (d, m) in graded.iter().enumerate() {
        println!("size {d}: {} elements", levels[d].len());
        for (w, n) in m {
            println!("  {} {n}", weight_label(w));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn epsilon_star(config: &Path, vector: &str, method: Method) -> Result<ExitCode> {
    let Loaded { setting: st, .. } = load(config, None)?;
    let x = ZVector::parse(vector, &st)?;
    let render = |v: &[Option<i64>]| -> String {
        v.iter()
            .map(|e| e.map_or("-".to_string(), |e| e.to_string()))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let ks = 1..=st.n();
    let forms: Vec<Option<i64>> = ks.clone().map(|k| oracle::epsilon_star_from_forms(&st, &x, k, 1)).collect();
    let brute = || -> Result<Vec<Option<i64>>> {
        if !oracle::reachable(&st, &WeightSpec::Infinity, &x) {
            bail!("{} is not in the image of B(infinity)", x.display_with(&st));
        }
        Ok(ks.clone().map(|k| oracle::epsilon_star_oracle(&st, &x, k)).collect())
    };
    match method {
        Method::Forms => println!("epsilon* {}", render(&forms)),
        Method::Oracle => println!("epsilon* {}", render(&brute()?)),
        Method::Both => {
            let b = brute()?;
            println!("forms  {}", render(&forms));
            println!("oracle {}", render(&b));
            if b != forms {
                println!("disagree");
                return Ok(ExitCode::from(1));
            }
            println!("agree");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn crosscheck(
    config: &Path,
    depth: usize,
    window: Option<usize>,
    lambda: Option<&str>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let Loaded { setting: st, lambda } = load(config, lambda)?;
    let window = window.unwrap_or(depth * st.seq.period());
    let mut weights = vec![WeightSpec::Infinity];
    if lambda.finite().is_some() {
        weights.push(lambda.clone());
    }
    let membership: Vec<CrosscheckReport> = weights
        .iter()
        .map(|l| oracle::crosscheck_membership(&st, l, depth, window))
        .collect();

    let mut closures = Vec::new();
    let c = inequality::xi_infinity(&st, window);
    let comb = shapes::comb_infinity(&st, window).forms();
    closures.push(json!({
        "set": "S' closure of x_j vs Comb[inf]",
        "converged": c.converged,
        "closure": c.forms.len(),
        "comb": comb.len(),
        "equal": c.forms == comb,
    }));
    if let Some(l) = lambda.finite() {
        for k in 1..=st.n() {
            let c = inequality::xi_lambda_k(&st, l, k, window);
            let mut comb = shapes::comb_lambda(&st, k, l[k - 1], window).forms();
            comb.insert(LinearForm::zero());
            closures.push(json!({
                "set": format!("S-hat closure of lambda^({k}) vs Comb_{k} and 0"),
                "converged": c.converged,
                "closure": c.forms.len(),
                "comb": comb.len(),
                "equal": c.forms == comb,
            }));
        }
    }

    let mismatches: Vec<_> = membership.iter().flat_map(|r| r.mismatches.iter().cloned()).collect();
    let ok = mismatches.is_empty() && closures.iter().all(|c| c["equal"] == true);
    let value = json!({
        "family": st.ty.name(),
        "word": st.seq.word(),
        "lambda": lambda.label(),
        "depth": depth,
        "window": window,
        "ok": ok,
        "mismatches": mismatches,
        "membership": membership,
        "closures": closures,
    });
    emit(&value, out)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("CRYSTAL_POLY_THREADS") {
        let n: usize = v.parse().with_context(|| format!("CRYSTAL_POLY_THREADS={v}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    init_threads()?;
    match cli.command {
        Command::GenIneq { config, mode, window, k, lambda, out } => {
            gen_ineq(&config, mode, window, k, lambda.as_deref(), out.as_deref())
        }
        Command::Check { config, vector, lambda, window } => check(&config, &vector, lambda.as_deref(), window),
        Command::Enumerate { config, depth, lambda, json } => enumerate(&config, depth, lambda.as_deref(), json),
        Command::EpsilonStar { config, vector, method } => epsilon_star(&config, &vector, method),
        Command::Crosscheck { config, depth, window, lambda, out } => {
            crosscheck(&config, depth, window, lambda.as_deref(), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
