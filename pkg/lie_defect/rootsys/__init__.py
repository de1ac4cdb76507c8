from .cartan import cartan_matrix
from .root_system import GroupSpec, RootSystem, build_root_system, root_closure, fundamental_degrees, \
    order_polynomial, bad_primes, is_good_prime, is_good_prime_for
