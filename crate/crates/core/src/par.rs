//! Thin indirection over the thread pool so every parallel entry point has a
//! sequential twin.
//!
//! With the `parallel` feature (on by default) the unsuffixed functions run
//! on rayon's pool; without it they alias the `_seq` variants. The `_seq`
//! variants are always compiled, so benches can compare both on the same
//! build and the fallback can never rot.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, preserving order.
pub fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_vec_seq(items, f)
    }
}

/// Sequential twin of [`map_vec`].
pub fn map_vec_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Fold `term(0) + term(1) + ... + term(len-1)` with an associative `add`.
pub fn fold_range<T, Z, F, A>(len: u64, zero: Z, term: F, add: A) -> T
where
    T: Send,
    Z: Fn() -> T + Sync + Send,
    F: Fn(u64) -> T + Sync + Send,
    A: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(term).reduce(&zero, add)
    }
    #[cfg(not(feature = "parallel"))]
    {
        fold_range_seq(len, zero, term, add)
    }
}

/// Sequential twin of [`fold_range`].
pub fn fold_range_seq<T, Z, F, A>(len: u64, zero: Z, term: F, add: A) -> T
where
    Z: Fn() -> T,
    F: Fn(u64) -> T,
    A: Fn(T, T) -> T,
{
    (0..len).fold(zero(), |acc, s| add(acc, term(s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_matches_seq() {
        let xs: Vec<u64> = (0..1000).collect();
        let f = |x: &u64| x * x + 1;
        assert_eq!(map_vec(&xs, f), map_vec_seq(&xs, f));
    }

    #[test]
    fn fold_matches_seq() {
        let term = |s: u64| s * 3;
        let a = fold_range(10_000, || 0u64, term, |x, y| x + y);
        let b = fold_range_seq(10_000, || 0u64, term, |x, y| x + y);
        assert_eq!(a, b);
        assert_eq!(a, 3 * (10_000 * 9_999) / 2);
    }

    #[test]
    fn fold_empty_range_is_zero() {
        let a = fold_range(0, || 7i64, |_| unreachable!(), |x, y| x + y);
        assert_eq!(a, 7);
    }
}
