import pytest

from lcbs import _kernels


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    # compile (or load from disk cache) every kernel once, so timing-sensitive
    # tests never measure jit latency
    _kernels.warm_up()
    return None
