"""
multibrot-sections - Tests Module
"""
