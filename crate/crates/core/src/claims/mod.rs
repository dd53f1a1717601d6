//! Claim registry and runtime configuration.

use std::sync::OnceLock;

/// Runtime knobs, read from the environment once.
#[derive(Clone, Debug)]
pub struct Config {
    /// deterministic sampling seed (`TKK_SEED`, default 0)
    pub seed: u64,
    /// worker threads (`TKK_THREADS`, default: all cores)
    pub threads: Option<usize>,
}

pub fn config() -> &'static Config {
    static CONFIG: OnceLock<Config> = OnceLock::new();
    CONFIG.get_or_init(|| {
        let seed = std::env::var("TKK_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0);
        let threads = std::env::var("TKK_THREADS")
            .ok()
            .and_then(|v| v.parse().ok());
        if let Some(t) = threads {
            // ignore failure: the global pool may already be initialized
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
        Config { seed, threads }
    })
}
