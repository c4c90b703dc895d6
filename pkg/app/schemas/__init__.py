"""
Pydantic Schemas Package
"""

from app.schemas.common import *
from app.schemas.invariants import *
from app.schemas.cech import *
from app.schemas.audit import *
from app.schemas.session import *
from app.schemas.corpus import *
