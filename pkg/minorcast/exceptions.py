class GraphFormatError(ValueError):
	def __init__(self, message: str, line_number: int = None):
		self.line_number = line_number
		if line_number is not None:
			message = f"line {line_number}: {message}"
		super().__init__(message)


class SelfLoopError(GraphFormatError):
	pass


class DuplicateEdgeError(GraphFormatError):
	pass


class InvalidVertexError(ValueError):
	pass


class UnknownVariableError(KeyError):
	pass


class GeneratorRetryError(RuntimeError):
	pass


class OracleCapError(ValueError):
	pass


class EmbeddingConsistencyError(RuntimeError):
	"""
	A decoded embedding failed independent verification.
	This always means the model or the engine is wrong, never the input.
	"""

	pass


class CutSoundnessError(RuntimeError):
	pass


class SearchBudgetExceeded(RuntimeError):
	pass
