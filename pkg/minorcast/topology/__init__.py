from .chimera import expected_chimera_counts, gen_chimera
from .factory import build_spec, generate, resolve_graph
from .pegasus import gen_pegasus
from .random_graph import gen_erdos_renyi
from .spec import ChimeraSpec, ErdosRenyiSpec, PegasusSpec, StructuredSpec
from .structured import (
	StructuredInstance,
	gen_structured,
	gen_structured_instance,
	illustrative_example,
)
