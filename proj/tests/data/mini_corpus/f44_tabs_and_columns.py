def pad():
	# tab indented comment describing the padding rule
	return "  "
