import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from curvatess.codecs import from_ascii

FIG_EG_LEFT = "a:bcde,b:caf,c:dab,d:eacf,e:dfa,f:bed"
FIG_EG_RIGHT = "a:edcb,b:fac,c:bad,d:fcae,e:afd,f:deb"


@pytest.fixture
def fig_eg():
    return from_ascii(FIG_EG_LEFT)


@pytest.fixture
def fig_eg_mirror():
    return from_ascii(FIG_EG_RIGHT)
