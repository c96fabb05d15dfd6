//! Game-table loading: either explicit Battle of the Sexes parameters or a
//! JSON file with a top-level "outcomes" or "bos" key.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde_json::Value;

use qbos_core::{BosParams, Outcome, PayoffTable};

use crate::report::{num_pair, object};

/// Table selection flags shared by every subcommand.
#[derive(Debug, clap::Args)]
pub struct TableArgs {
    /// JSON game-table file with top-level "outcomes" or "bos"
    #[arg(long, global = true, value_name = "PATH")]
    pub table: Option<PathBuf>,

    /// Matched-outcome payoff favoring player 1 (default 5)
    #[arg(long, global = true)]
    pub alpha: Option<f64>,

    /// Matched-outcome payoff favoring player 2 (default 3)
    #[arg(long, global = true)]
    pub beta: Option<f64>,

    /// Payoff to both players on mismatched outcomes (default 1)
    #[arg(long, global = true)]
    pub gamma_mis: Option<f64>,

    /// Accept alpha == beta (the symmetric matched-payoff game)
    #[arg(long, global = true)]
    pub allow_equal_alpha_beta: bool,
}

/// A resolved table plus where it came from, for the config echo.
pub struct ResolvedTable {
    pub table: PayoffTable,
    pub source: String,
}

impl TableArgs {
    pub fn resolve(&self) -> Result<ResolvedTable> {
        let has_params =
            self.alpha.is_some() || self.beta.is_some() || self.gamma_mis.is_some();
        if let Some(path) = &self.table {
            if has_params {
                bail!("--table conflicts with --alpha/--beta/--gamma-mis; pass one or the other");
            }
            let table = load_table_file(path, self.allow_equal_alpha_beta)?;
            return Ok(ResolvedTable { table, source: format!("file:{}", path.display()) });
        }
        let defaults = BosParams::default_game();
        let alpha = self.alpha.unwrap_or(defaults.alpha);
        let beta = self.beta.unwrap_or(defaults.beta);
        let gamma_mis = self.gamma_mis.unwrap_or(defaults.gamma_mis);
        let params = if self.allow_equal_alpha_beta {
            BosParams::with_tie_allowed(alpha, beta, gamma_mis)?
        } else {
            BosParams::new(alpha, beta, gamma_mis)?
        };
        let source = if has_params { "params".to_string() } else { "default".to_string() };
        Ok(ResolvedTable { table: PayoffTable::from_bos(&params), source })
    }

    /// Config echo: source plus the four resolved payoff pairs.
    pub fn echo(&self, resolved: &ResolvedTable) -> Value {
        let mut entries = Vec::new();
        for outcome in Outcome::ALL {
            entries.push((outcome.label(), num_pair(resolved.table.payoffs(outcome))));
        }
        object(vec![
            ("source", Value::from(resolved.source.clone())),
            ("outcomes", object(entries)),
            ("allow_equal_alpha_beta", Value::from(self.allow_equal_alpha_beta)),
        ])
    }
}

fn load_table_file(path: &Path, allow_tie: bool) -> Result<PayoffTable> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading table file {}", path.display()))?;
    let root: Value = serde_json::from_str(&text)
        .with_context(|| format!("parsing table file {}", path.display()))?;
    let root = root
        .as_object()
        .ok_or_else(|| anyhow!("table file must hold a JSON object at the top level"))?;

    for key in root.keys() {
        if key != "outcomes" && key != "bos" {
            bail!("unknown top-level key \"{key}\"; expected \"outcomes\" or \"bos\"");
        }
    }
    match (root.get("outcomes"), root.get("bos")) {
        (Some(_), Some(_)) => {
            bail!("table file must have exactly one of \"outcomes\" and \"bos\", found both")
        }
        (None, None) => {
            bail!("table file must have exactly one of \"outcomes\" and \"bos\", found neither")
        }
        (Some(outcomes), None) => parse_outcomes(outcomes),
        (None, Some(bos)) => parse_bos(bos, allow_tie),
    }
}

fn parse_outcomes(outcomes: &Value) -> Result<PayoffTable> {
    let map = outcomes
        .as_object()
        .ok_or_else(|| anyhow!("\"outcomes\" must be an object keyed by \"00\".\"11\""))?;
    for key in map.keys() {
        if !Outcome::ALL.iter().any(|o| o.label() == key) {
            bail!("\"outcomes\" has unknown key \"{key}\"");
        }
    }
    let mut entries = [(0.0, 0.0); 4];
    for outcome in Outcome::ALL {
        let key = outcome.label();
        let pair = map
            .get(key)
            .ok_or_else(|| anyhow!("\"outcomes\" is missing key \"{key}\""))?;
        let arr = pair
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| anyhow!("outcome \"{key}\" must be a two-element payoff array"))?;
        let u1 = arr[0]
            .as_f64()
            .ok_or_else(|| anyhow!("outcome \"{key}\" payoff for player 1 must be a number"))?;
        let u2 = arr[1]
            .as_f64()
            .ok_or_else(|| anyhow!("outcome \"{key}\" payoff for player 2 must be a number"))?;
        entries[outcome.index()] = (u1, u2);
    }
    Ok(PayoffTable::new(entries)?)
}

fn parse_bos(bos: &Value, allow_tie: bool) -> Result<PayoffTable> {
    let map = bos
        .as_object()
        .ok_or_else(|| anyhow!("\"bos\" must be an object with alpha, beta, gamma_mis"))?;
    for key in map.keys() {
        if !["alpha", "beta", "gamma_mis"].contains(&key.as_str()) {
            bail!("\"bos\" has unknown key \"{key}\"");
        }
    }
    let get = |key: &'static str| -> Result<f64> {
        map.get(key)
            .ok_or_else(|| anyhow!("\"bos\" is missing key \"{key}\""))?
            .as_f64()
            .ok_or_else(|| anyhow!("\"bos\" key \"{key}\" must be a number"))
    };
    let (alpha, beta, gamma_mis) = (get("alpha")?, get("beta")?, get("gamma_mis")?);
    let params = if allow_tie {
        BosParams::with_tie_allowed(alpha, beta, gamma_mis)?
    } else {
        BosParams::new(alpha, beta, gamma_mis)?
    };
    Ok(PayoffTable::from_bos(&params))
}
