# the loader caches parsed sources between invocations
A = 1

# cache entries expire after an hour of inactivity
B = 2

# eviction runs on a background timer thread
C = 3

# the timer interval grows under memory pressure
D = 4

# writers always invalidate the whole cache entry
E = 5

# readers never block while an invalidation runs
F = 6

# the cache key includes the source modification time
G = 7

# stale reads are possible within one timer interval
H = 8

# metrics report the hit ratio every five minutes
I = 9

# the ratio stays above ninety percent in production
J = 10

# lowering the interval did not move the ratio much
K = 11
