//! Command-line front end: compute family members, expand polynomials over
//! an Euler basis, tabulate values, and run identity-verification grids.
//!
//! Exit codes: 0 on success (for `verify`: every instance expected to pass
//! did pass), 1 when a verification instance unexpectedly fails, 2 for
//! usage or input-parse errors. The erratum audit `thm6-printed` reports
//! its discrepancies but never drives the exit code.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerbasis::{
    bernoulli_poly_order, euler_number_order, euler_poly_order, expand_theorem1, parse_polynomial,
    run_grid, GridBounds, IdentityId, IdentityReport,
};

use output::{Format, TableCell};

#[derive(Parser)]
#[command(name = "eulerbasis", version, about = "Exact Euler/Bernoulli polynomial toolkit")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial of a family
    Poly {
        /// Polynomial family
        #[arg(long, value_enum)]
        family: PolyFamily,
        /// Degree n
        #[arg(long)]
        n: usize,
        /// Family order (r for Euler, s for Bernoulli)
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Expand a polynomial over the order-r Euler basis
    Expand {
        /// Polynomial text, e.g. "3/2*x^2 - x + 1"
        #[arg(long)]
        poly: String,
        /// Basis order r
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Tabulate polynomials or numbers over degrees 0..=n-max and orders
    /// 0..=order-max (one row per order)
    Table {
        #[arg(long, value_enum)]
        family: TableFamily,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        order_max: usize,
    },
    /// Check identities exactly over a parameter grid
    Verify {
        /// Identity to check (repeatable)
        #[arg(long = "identity", value_enum, required = true)]
        identities: Vec<IdentityArg>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    Euler,
    Bernoulli,
}

impl PolyFamily {
    fn name(self) -> &'static str {
        match self {
            PolyFamily::Euler => "euler",
            PolyFamily::Bernoulli => "bernoulli",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    Euler,
    Bernoulli,
    EulerNumber,
    BernoulliNumber,
}

impl TableFamily {
    fn name(self) -> &'static str {
        match self {
            TableFamily::Euler => "euler",
            TableFamily::Bernoulli => "bernoulli",
            TableFamily::EulerNumber => "euler-number",
            TableFamily::BernoulliNumber => "bernoulli-number",
        }
    }

    fn cell(self, n: usize, order: usize) -> TableCell {
        match self {
            TableFamily::Euler => TableCell::Poly(euler_poly_order(n, order)),
            TableFamily::Bernoulli => TableCell::Poly(bernoulli_poly_order(n, order)),
            TableFamily::EulerNumber => TableCell::Number(euler_number_order(n, order)),
            // B_n^{(s)} is the constant term of B_n^{(s)}(x)
            TableFamily::BernoulliNumber => {
                TableCell::Number(bernoulli_poly_order(n, order).coeff(0))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    Cor2,
    Cor3,
    Eq17,
    Thm4,
    Eq19,
    Thm5,
    Eq20,
    Thm6Printed,
    Thm6Corrected,
}

impl From<IdentityArg> for IdentityId {
    fn from(arg: IdentityArg) -> IdentityId {
        match arg {
            IdentityArg::Cor2 => IdentityId::Cor2,
            IdentityArg::Cor3 => IdentityId::Cor3,
            IdentityArg::Eq17 => IdentityId::Eq17,
            IdentityArg::Thm4 => IdentityId::Thm4,
            IdentityArg::Eq19 => IdentityId::Eq19,
            IdentityArg::Thm5 => IdentityId::Thm5,
            IdentityArg::Eq20 => IdentityId::Eq20,
            IdentityArg::Thm6Printed => IdentityId::Thm6Printed,
            IdentityArg::Thm6Corrected => IdentityId::Thm6Corrected,
        }
    }
}

#[derive(Args)]
struct BoundArgs {
    /// Largest degree n
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Largest m for the product identities (defaults to n-max)
    #[arg(long)]
    m_max: Option<usize>,
    /// Largest Euler-basis order r
    #[arg(long, default_value_t = 3)]
    r_max: usize,
    /// Largest Bernoulli order s
    #[arg(long, default_value_t = 3)]
    s_max: usize,
    /// Largest derivative order k (defaults to n-max)
    #[arg(long)]
    k_max: Option<usize>,
}

impl From<&BoundArgs> for GridBounds {
    fn from(args: &BoundArgs) -> GridBounds {
        GridBounds {
            n_max: args.n_max,
            m_max: args.m_max,
            r_max: args.r_max,
            s_max: args.s_max,
            k_max: args.k_max,
        }
    }
}

/// `verify` exits 0 iff every instance expected to pass did pass; the
/// as-typeset erratum audit is reported but never fails the run.
fn verification_ok(reports: &[IdentityReport]) -> bool {
    reports
        .iter()
        .all(|r| r.pass || r.identity == IdentityId::Thm6Printed)
}

fn run(cli: &Cli) -> Result<(String, u8), String> {
    match &cli.command {
        Command::Poly { family, n, order } => {
            let p = match family {
                PolyFamily::Euler => euler_poly_order(*n, *order),
                PolyFamily::Bernoulli => bernoulli_poly_order(*n, *order),
            };
            Ok((
                output::render_poly_output(family.name(), *n, *order, &p, cli.format),
                0,
            ))
        }
        Command::Expand { poly, order } => {
            let parsed = parse_polynomial(poly).map_err(|e| e.to_string())?;
            let expansion = expand_theorem1(&parsed, *order);
            Ok((
                output::render_expansion_output(&parsed, *order, expansion.coeffs(), cli.format),
                0,
            ))
        }
        Command::Table {
            family,
            n_max,
            order_max,
        } => {
            let rows: Vec<Vec<TableCell>> = (0..=*order_max)
                .map(|order| (0..=*n_max).map(|n| family.cell(n, order)).collect())
                .collect();
            Ok((
                output::render_table_output(family.name(), *n_max, *order_max, &rows, cli.format),
                0,
            ))
        }
        Command::Verify { identities, bounds } => {
            let ids: Vec<IdentityId> = identities.iter().map(|&id| id.into()).collect();
            let reports = run_grid(&ids, &GridBounds::from(bounds));
            let ok = verification_ok(&reports);
            let text = output::render_verify_output(&reports, ok, cli.format);
            Ok((text, if ok { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let text = text + "\n";
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eulerbasis::check_theorem6;
    use eulerbasis::Theorem6Mode;

    #[test]
    fn exit_code_ignores_printed_mode_failures() {
        let failing_printed = check_theorem6(4, 2, 1, Theorem6Mode::Printed).unwrap();
        assert!(!failing_printed.pass);
        assert!(verification_ok(&[failing_printed.clone()]));

        // the same failing report under any other identity would fail the run
        let mut synthetic = failing_printed;
        synthetic.identity = IdentityId::Eq20;
        assert!(!verification_ok(&[synthetic]));

        let passing = check_theorem6(4, 2, 1, Theorem6Mode::Corrected).unwrap();
        assert!(verification_ok(&[passing]));
        assert!(verification_ok(&[]));
    }
}
