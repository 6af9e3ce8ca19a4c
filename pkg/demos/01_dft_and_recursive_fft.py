# %% [markdown]
# # The discrete Fourier transform, directly and recursively
#
# Coefficients `a_0 .. a_{N-1}` with `N = 2**n` are sent to
# `b_k = 2**(-n/2) * sum_j zeta**(j*k) * a_j`, where `zeta = exp(2*pi*i/N)`.
# Up to the scale factor this evaluates the polynomial `P(X) = sum_j a_j X**j`
# at the N powers of zeta.

# %%
import numpy as np

from recqft.fft import OpCounter, butterfly_count, dft_direct, fft_recursive, split_even_odd

a = np.array([0, 1, 0, 0], dtype=complex)
print("direct transform of e_1:", np.round(dft_direct(a), 12))

# %% [markdown]
# ## Even/odd split
#
# `P(X) = P_even(X**2) + X * P_odd(X**2)`. The halves hold the even- and
# odd-indexed coefficients.

# %%
even, odd = split_even_odd(np.arange(8))
print("even:", even.real, " odd:", odd.real)

# %% [markdown]
# ## Recursive transform and its cost
#
# Two half-size transforms plus one butterfly per output pair. The counter
# records one twiddle product per butterfly, so an order-n transform
# performs `n * 2**(n-1)` of them.

# %%
rng = np.random.default_rng(0)
for n in range(1, 13):
    x = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    counter = OpCounter()
    y = fft_recursive(x, counter)
    err = np.max(np.abs(y - dft_direct(x)))
    print(f"n={n:2d}  mults={counter.complex_mults:6d}  n*2^(n-1)={butterfly_count(n):6d}  "
          f"max|fft - dft|={err:.1e}")

# %% [markdown]
# ## Norm preservation
#
# The normalization makes the transform unitary, so lengths are preserved.

# %%
x = rng.standard_normal(256) + 1j * rng.standard_normal(256)
print("norm in:", np.linalg.norm(x), " norm out:", np.linalg.norm(dft_direct(x)))
