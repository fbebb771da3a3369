/// The `n`-th prime, 1-indexed: `nth_prime(1) = 2`.
pub fn nth_prime(n: usize) -> u64 {
    assert!(n >= 1, "prime indices start at 1");
    (2u64..)
        .filter(|&p| is_prime(p))
        .nth(n - 1)
        .expect("infinitely many primes")
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Position of `p` among the primes, or `None` if `p` is not prime.
pub fn prime_index(p: u64) -> Option<usize> {
    is_prime(p).then(|| (2..=p).filter(|&q| is_prime(q)).count())
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
