"""The fusion ring R_k(A): coefficients, Kac-Walton folding and Verlinde traces."""
