import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from akdecomp.mpart import Multipartition, ParamSet  # noqa: E402

CONFIGS = [ParamSet(2, (0,)), ParamSet(3, (0, 1)), ParamSet(4, (0, 2, 3))]
E4 = ParamSet(4, (0, 2, 3))


def mp(text):
    return Multipartition.parse(text)


@pytest.fixture(params=CONFIGS, ids=str)
def config(request):
    return request.param
