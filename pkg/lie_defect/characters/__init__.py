from .records import CharacterRecord, defect_polynomial
from .gl_unipotent import gl_unipotent_degree, gl_support_class, gl_unipotent_characters
from .tables import load_character_table, load_character_file, resolve_table_path, sp4_unipotent_characters
