//! Small shared helpers.

/// Maps `f` over `items` on up to `threads` OS threads, preserving input
/// order in the output. `threads <= 1` runs inline.
pub fn parallel_map<T, R, F>(items: Vec<T>, threads: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if threads <= 1 || items.len() <= 1 {
        return items.iter().map(|t| f(t)).collect();
    }
    let n = items.len();
    let chunk = n.div_ceil(threads.min(n));
    let mut out: Vec<Option<R>> = Vec::with_capacity(n);
    out.resize_with(n, || None);
    std::thread::scope(|scope| {
        for (slot_chunk, item_chunk) in out.chunks_mut(chunk).zip(items.chunks(chunk)) {
            let f = &f;
            scope.spawn(move || {
                for (slot, item) in slot_chunk.iter_mut().zip(item_chunk.iter()) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("filled by worker")).collect()
}

/// Reads the thread cap from `THOMPSON_LAB_THREADS`; defaults to 1.
pub fn thread_cap() -> usize {
    std::env::var("THOMPSON_LAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_map_preserves_order() {
        let items: Vec<i64> = (0..100).collect();
        let doubled = parallel_map(items.clone(), 4, |x| x * 2);
        assert_eq!(doubled, items.iter().map(|x| x * 2).collect::<Vec<_>>());
        let single = parallel_map(items.clone(), 1, |x| x * 2);
        assert_eq!(doubled, single);
    }
}
