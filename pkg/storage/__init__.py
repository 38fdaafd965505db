from .json_storage import JsonStorage, LoadedTriangulation, dumps
