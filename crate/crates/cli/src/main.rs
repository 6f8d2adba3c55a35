use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ratcap_core::logic::{normal_form, parse_formula_with, translate_tr, ParseOptions};
use ratcap_core::mc::oracle::{oracle_mc, DEFAULT_BOUND};
use ratcap_core::mc::{check, state_names, Future, McOptions, RatScope};
use ratcap_core::model::{adjoint_transform, json as model_json, validate};
use ratcap_core::validity::{sat_json, verdict_json, Decider};
use ratcap_core::{Cgsp, Formula};

#[derive(Parser, Debug)]
#[command(name = "ratcap", version, about = "Model and validity checking for rational coalition capabilities")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a model file against the structural constraints.
    Validate { model: PathBuf },
    /// Report the states of a model where a formula holds.
    Mc {
        model: PathBuf,
        /// Formula text, or `@path` to read it from a file.
        formula: String,
        /// Exit 0 iff the formula holds at this state.
        #[arg(long)]
        state: Option<String>,
        #[command(flatten)]
        semantics: SemanticsArgs,
        /// Accept `rat_` atoms, e.g. in translated formulas.
        #[arg(long)]
        allow_reserved: bool,
    },
    /// Decide validity of a next-time formula.
    Valid {
        formula: String,
        #[command(flatten)]
        agents: AgentArgs,
        /// Write the countermodel here when the formula is invalid.
        #[arg(long, value_name = "PATH")]
        countermodel: Option<PathBuf>,
    },
    /// Decide satisfiability of a next-time formula.
    Sat {
        formula: String,
        #[command(flatten)]
        agents: AgentArgs,
        /// Write the satisfying model here when there is one.
        #[arg(long, value_name = "PATH", alias = "model")]
        countermodel: Option<PathBuf>,
    },
    /// Replace rational operators by plain ones guarded with `rat_` atoms.
    Translate {
        formula: String,
        #[command(flatten)]
        agents: AgentArgs,
    },
    /// Print the standard-disjunction normal form.
    Nf {
        formula: String,
        #[command(flatten)]
        agents: AgentArgs,
    },
    /// Write the joint-action-disjoint copy of a model.
    Transform {
        model: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate by strategy enumeration and compare with the checker.
    Oracle {
        model: PathBuf,
        formula: String,
        #[command(flatten)]
        semantics: SemanticsArgs,
        #[arg(long, env = "RATCAP_ORACLE_BOUND", default_value_t = DEFAULT_BOUND)]
        oracle_bound: u64,
    },
}

#[derive(Args, Debug)]
struct SemanticsArgs {
    #[arg(long, default_value_t = RatScope::Global)]
    rat_scope: RatScope,
    #[arg(long, default_value_t = Future::Strict)]
    future: Future,
}

impl SemanticsArgs {
    fn options(&self) -> McOptions {
        McOptions {
            rat_scope: self.rat_scope,
            future: self.future,
        }
    }
}

#[derive(Args, Debug)]
struct AgentArgs {
    /// Comma-separated agent names.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    agents: Vec<String>,
}

/// Exit status of a completed query.
enum Answer {
    Holds,
    Fails,
}

impl From<bool> for Answer {
    fn from(b: bool) -> Self {
        if b {
            Answer::Holds
        } else {
            Answer::Fails
        }
    }
}

fn read_formula_text(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .with_context(|| format!("reading formula file {path}")),
        None => Ok(arg.to_string()),
    }
}

fn formula(arg: &str, agents: &[String], allow_reserved: bool) -> Result<Formula> {
    let text = read_formula_text(arg)?;
    Ok(parse_formula_with(&text, agents, ParseOptions { allow_reserved })?)
}

fn load_model(path: &Path) -> Result<Cgsp> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    model_json::from_json(&text).with_context(|| format!("loading {}", path.display()))
}

fn write_model(path: &Path, model: &Cgsp) -> Result<()> {
    fs::write(path, model_json::to_json(model) + "\n")
        .with_context(|| format!("writing {}", path.display()))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn options_json(opts: McOptions) -> serde_json::Value {
    json!({ "rat_scope": opts.rat_scope.to_string(), "future": opts.future.to_string() })
}

fn run(cli: Cli) -> Result<Answer> {
    let as_json = cli.json;
    match cli.command {
        Command::Validate { model } => {
            let m = load_model(&model)?;
            let report = validate(&m);
            if as_json {
                let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                print_json(&json!({ "ok": report.is_ok(), "violations": violations }));
            } else {
                println!("{report}");
            }
            Ok(report.is_ok().into())
        }
        Command::Mc {
            model,
            formula: text,
            state,
            semantics,
            allow_reserved,
        } => {
            let m = load_model(&model)?;
            let phi = formula(&text, m.agents(), allow_reserved)?;
            let opts = semantics.options();
            let outcome = check(&m, &phi, opts)?;
            for atom in &outcome.unknown_atoms {
                eprintln!("warning: atom `{atom}` labels no state and is false everywhere");
            }
            let holds = state_names(&m, &outcome.states);
            if as_json {
                print_json(&json!({
                    "formula": phi.to_string(),
                    "holds_at": holds,
                    "options": options_json(opts),
                }));
            } else {
                for s in &holds {
                    println!("{s}");
                }
            }
            match state {
                Some(name) => {
                    let w = m.state_id(&name)?;
                    Ok(outcome.states.contains(w).into())
                }
                None => Ok(Answer::Holds),
            }
        }
        Command::Valid {
            formula: text,
            agents,
            countermodel,
        } => {
            let phi = formula(&text, &agents.agents, false)?;
            let verdict = Decider::new(agents.agents)?.verdict(&phi)?;
            if as_json {
                print_json(&verdict_json(&phi, &verdict));
            } else {
                println!("{}", if verdict.valid { "valid" } else { "invalid" });
            }
            if let (Some(path), Some((m, root))) = (&countermodel, &verdict.countermodel) {
                write_model(path, m)?;
                if !as_json {
                    println!("countermodel written to {} (root {})", path.display(), m.state_name(*root));
                }
            }
            Ok(verdict.valid.into())
        }
        Command::Sat {
            formula: text,
            agents,
            countermodel,
        } => {
            let phi = formula(&text, &agents.agents, false)?;
            let verdict = Decider::new(agents.agents)?.satisfiability(&phi)?;
            if as_json {
                print_json(&sat_json(&phi, &verdict));
            } else {
                println!("{}", if verdict.satisfiable { "satisfiable" } else { "unsatisfiable" });
            }
            if let (Some(path), Some((m, root))) = (&countermodel, &verdict.model) {
                write_model(path, m)?;
                if !as_json {
                    println!("model written to {} (root {})", path.display(), m.state_name(*root));
                }
            }
            Ok(verdict.satisfiable.into())
        }
        Command::Translate { formula: text, agents } => {
            let phi = formula(&text, &agents.agents, false)?;
            let t = translate_tr(&phi, &agents.agents)?;
            if as_json {
                print_json(&json!({ "formula": phi.to_string(), "translation": t.to_string() }));
            } else {
                println!("{t}");
            }
            Ok(Answer::Holds)
        }
        Command::Nf { formula: text, agents } => {
            let phi = formula(&text, &agents.agents, false)?;
            let nf = normal_form(&phi)?;
            if as_json {
                let conjuncts: Vec<_> = nf.iter().map(|d| d.to_json()).collect();
                print_json(&json!({ "formula": phi.to_string(), "conjuncts": conjuncts }));
            } else {
                for d in &nf {
                    println!("{d}");
                }
            }
            Ok(Answer::Holds)
        }
        Command::Transform { model, output } => {
            let m = load_model(&model)?;
            let report = validate(&m);
            if !report.is_ok() {
                bail!("model is invalid:\n{report}");
            }
            let t = adjoint_transform(&m)?;
            match output {
                Some(path) => write_model(&path, &t)?,
                None => println!("{}", model_json::to_json(&t)),
            }
            Ok(Answer::Holds)
        }
        Command::Oracle {
            model,
            formula: text,
            semantics,
            oracle_bound,
        } => {
            let m = load_model(&model)?;
            let phi = formula(&text, m.agents(), false)?;
            let opts = semantics.options();
            let fast = check(&m, &phi, opts)?.states;
            let slow = oracle_mc(&m, &phi, opts, oracle_bound)?;
            let agree = fast == slow;
            let only_mc = state_names(&m, &fast.difference(&slow));
            let only_oracle = state_names(&m, &slow.difference(&fast));
            if as_json {
                print_json(&json!({
                    "formula": phi.to_string(),
                    "holds_at": state_names(&m, &slow),
                    "options": options_json(opts),
                    "agree": agree,
                    "only_mc": only_mc,
                    "only_oracle": only_oracle,
                }));
            } else {
                println!("{}", state_names(&m, &slow).join(" "));
                if agree {
                    println!("AGREE");
                } else {
                    println!("DISAGREE mc-only: [{}] oracle-only: [{}]", only_mc.join(" "), only_oracle.join(" "));
                }
            }
            Ok(agree.into())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Answer::Holds) => ExitCode::SUCCESS,
        Ok(Answer::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
