def width():
    """返回 表格 的 宽度 用于 布局 计算"""
    return 80
