def quote():
    # she said "use repr() carefully" about the formatter
    return '#not a comment'
