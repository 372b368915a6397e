use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{invalid, Error, Result};

use super::{solve_for_m, DiophantineSolution};

/// Default number of `m` values per work unit.
pub const DEFAULT_CHUNK: u64 = 1024;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub checkpoint: Option<PathBuf>,
    pub workers: usize,
    pub chunk: u64,
    /// Stop claiming work after this many chunks complete in this call;
    /// the checkpoint then records a partial run.
    pub stop_after: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { checkpoint: None, workers: 1, chunk: DEFAULT_CHUNK, stop_after: None }
    }
}

/// Resumable progress of a range search. `params_hash` is the SHA-256 of
/// the range, the chunk size, the completed chunks and the solutions, so a
/// file edited by hand is refused.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCheckpoint {
    pub m_lo: u64,
    pub m_hi: u64,
    pub chunk: u64,
    /// Indices of completed chunks, ascending.
    pub frontier_chunks: Vec<u64>,
    pub found: Vec<DiophantineSolution>,
    pub params_hash: String,
}

impl SearchCheckpoint {
    fn fresh(m_lo: u64, m_hi: u64, chunk: u64) -> Self {
        let mut c = SearchCheckpoint {
            m_lo,
            m_hi,
            chunk,
            frontier_chunks: Vec::new(),
            found: Vec::new(),
            params_hash: String::new(),
        };
        c.params_hash = c.compute_hash();
        c
    }

    fn compute_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("ordersize-dio/1 {} {} {}\n", self.m_lo, self.m_hi, self.chunk));
        for c in &self.frontier_chunks {
            h.update(format!("c {c}\n"));
        }
        for s in &self.found {
            h.update(format!("s {} {} {} {} {}\n", s.m, s.x1, s.x2, s.x3, s.f));
        }
        hex::encode(h.finalize())
    }

    pub fn chunk_count(&self) -> u64 {
        (self.m_hi - self.m_lo) / self.chunk + 1
    }

    pub fn is_complete(&self) -> bool {
        self.frontier_chunks.len() as u64 == self.chunk_count()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let c: SearchCheckpoint =
            serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if c.compute_hash() != c.params_hash {
            return Err(Error::Checkpoint(format!("{}: content hash mismatch", path.display())));
        }
        Ok(c)
    }

    /// Writes to a sibling temporary file, then renames over `path`.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    fn record(&mut self, chunk: u64, sols: Vec<DiophantineSolution>) {
        if let Err(i) = self.frontier_chunks.binary_search(&chunk) {
            self.frontier_chunks.insert(i, chunk);
        }
        let mut all: BTreeSet<_> = self.found.drain(..).collect();
        all.extend(sols);
        self.found = all.into_iter().collect();
        self.params_hash = self.compute_hash();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Sorted by `m`, then `x3`.
    pub solutions: Vec<DiophantineSolution>,
    pub checkpoint: SearchCheckpoint,
    /// Chunks completed by this call (not counting resumed ones).
    pub chunks_done: u64,
}

impl SearchOutcome {
    pub fn complete(&self) -> bool {
        self.checkpoint.is_complete()
    }
}

/// Runs [`solve_for_m`] for every `m` in `m_lo..=m_hi`, split into chunks
/// claimed by `workers` threads from a shared queue. With a checkpoint path,
/// progress is flushed after every chunk and an existing file for the same
/// range and chunk size is resumed. The result does not depend on the worker
/// count or on where earlier runs were interrupted.
pub fn search_range(m_lo: u64, m_hi: u64, opts: &SearchOptions) -> Result<SearchOutcome> {
    if m_lo < 4 || m_lo > m_hi {
        return invalid(format!("need 4 <= m_lo <= m_hi, got [{m_lo}, {m_hi}]"));
    }
    if opts.chunk == 0 {
        return invalid("chunk size must be positive");
    }
    let state = match &opts.checkpoint {
        Some(p) if p.exists() => {
            let c = SearchCheckpoint::load(p)?;
            if (c.m_lo, c.m_hi, c.chunk) != (m_lo, m_hi, opts.chunk) {
                return Err(Error::Checkpoint(format!(
                    "{} belongs to range [{}, {}] with chunk {}",
                    p.display(),
                    c.m_lo,
                    c.m_hi,
                    c.chunk
                )));
            }
            c
        }
        _ => SearchCheckpoint::fresh(m_lo, m_hi, opts.chunk),
    };
    let pending: Vec<u64> =
        (0..state.chunk_count()).filter(|c| state.frontier_chunks.binary_search(c).is_err()).collect();
    let next = AtomicUsize::new(0);
    let done = AtomicUsize::new(0);
    let shared = Mutex::new((state, None::<Error>));
    let limit = opts.stop_after.unwrap_or(usize::MAX);

    std::thread::scope(|scope| {
        for _ in 0..opts.workers.max(1) {
            scope.spawn(|| loop {
                if done.load(Ordering::SeqCst) >= limit {
                    break;
                }
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(&chunk) = pending.get(i) else { break };
                let lo = m_lo + chunk * opts.chunk;
                let hi = (lo + opts.chunk - 1).min(m_hi);
                let mut sols = Vec::new();
                for m in lo..=hi {
                    sols.extend(solve_for_m(m).expect("m >= 4"));
                }
                let mut guard = shared.lock().expect("worker panicked");
                if guard.1.is_some() || done.load(Ordering::SeqCst) >= limit {
                    break;
                }
                guard.0.record(chunk, sols);
                done.fetch_add(1, Ordering::SeqCst);
                if let Some(p) = &opts.checkpoint {
                    if let Err(e) = guard.0.save(p) {
                        guard.1 = Some(e);
                    }
                }
            });
        }
    });

    let (checkpoint, err) = shared.into_inner().expect("worker panicked");
    if let Some(e) = err {
        return Err(e);
    }
    if let Some(p) = &opts.checkpoint {
        checkpoint.save(p)?;
    }
    Ok(SearchOutcome {
        solutions: checkpoint.found.clone(),
        chunks_done: done.load(Ordering::SeqCst) as u64,
        checkpoint,
    })
}
