use std::path::PathBuf;

use clap::Args;
use serde_json::json;
use tetwidth_core::hypbounds::{ball_volume, greedy_net, net_size_bound, two_bridge_volume_lower};

use super::{domain, read, usage, with_path, CliError, Report};
use crate::formats::read_metric;

#[derive(Args, Debug)]
pub struct NetArgs {
    /// Square CSV distance matrix.
    #[arg(long)]
    pub metric: PathBuf,
    #[arg(long)]
    pub eps: f64,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Volume for the net-size rows.
    #[arg(long, requires = "eps")]
    pub vol: Option<f64>,
    /// Separation radii (comma separated).
    #[arg(long, value_delimiter = ',', requires = "vol")]
    pub eps: Vec<f64>,
    /// Twist region counts for the 2-bridge volume rows (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub twist: Vec<usize>,
}

pub fn net(args: &NetArgs) -> Result<Report, CliError> {
    let m = read_metric(&read(&args.metric)?).map_err(with_path(&args.metric))?;
    let net = greedy_net(&m, args.eps).map_err(domain)?;
    // Farthest any point lies from the net.
    let radius = (0..m.len())
        .map(|p| net.iter().map(|&q| m.dist(p, q)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    Ok(Report {
        json: json!({ "ok": true, "points": m.len(), "eps": args.eps, "net": net, "coveringRadius": radius }),
        text: format!(
            "{} of {} points, pairwise >= {}, covering radius {radius}\nnet: {net:?}\n",
            net.len(),
            m.len(),
            args.eps
        ),
    })
}

pub fn bounds(args: &BoundsArgs) -> Result<Report, CliError> {
    if args.vol.is_none() && args.twist.is_empty() {
        return Err(usage("bounds needs --vol with --eps, or --twist"));
    }
    let mut text = String::new();
    let mut nets = Vec::new();
    if let Some(vol) = args.vol {
        text += &format!("volume {vol}\n{:>12} {:>16} {:>16} {:>16}\n", "eps", "ball(eps/2)", "tight", "simple");
        for &eps in &args.eps {
            let ball = ball_volume(eps / 2.0).map_err(domain)?;
            let (tight, simple) = net_size_bound(vol, eps).map_err(domain)?;
            text += &format!("{eps:>12} {ball:>16.6e} {tight:>16.6e} {simple:>16.6e}\n");
            nets.push(json!({ "eps": eps, "ballVolume": ball, "tight": tight, "simple": simple }));
        }
    }
    let mut twists = Vec::new();
    if !args.twist.is_empty() {
        text += &format!("{:>12} {:>16}\n", "twists", "volume >=");
        for &n in &args.twist {
            let v = two_bridge_volume_lower(n).map_err(domain)?;
            text += &format!("{n:>12} {v:>16.6}\n");
            twists.push(json!({ "twists": n, "volumeLower": v }));
        }
    }
    Ok(Report {
        json: json!({ "ok": true, "vol": args.vol, "netBounds": nets, "twoBridge": twists }),
        text,
    })
}
